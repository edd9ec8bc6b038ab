#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hypcomp {

// Ordered, immutable list of variable names. Copies share storage.
class VarContext {
 public:
  VarContext();
  explicit VarContext(std::vector<std::string> names);

  std::size_t arity() const noexcept { return names_->size(); }
  std::span<const std::string> names() const noexcept { return *names_; }
  const std::string& name(std::size_t index) const { return names_->at(index); }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(const VarContext& a, const VarContext& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

// Throws ContextMismatch unless the two contexts are equal.
void require_same_context(const VarContext& a, const VarContext& b, std::string_view what);

}  // namespace hypcomp
