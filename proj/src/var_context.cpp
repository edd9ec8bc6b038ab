#include "hypcomp/var_context.hpp"

#include "hypcomp/errors.hpp"

#include <set>

namespace hypcomp {

VarContext::VarContext() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarContext::VarContext(std::vector<std::string> names) {
  std::set<std::string, std::less<>> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarContext::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VarContext::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable(std::string(name));
}

bool operator==(const VarContext& a, const VarContext& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

void require_same_context(const VarContext& a, const VarContext& b, std::string_view what) {
  if (!(a == b)) throw ContextMismatch(std::string(what) + ": operands live in different variable contexts");
}

}  // namespace hypcomp
