#include "orbq/algebra/variables.hpp"

#include <algorithm>
#include <set>

#include "orbq/errors.hpp"

namespace orbq {

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>();
  return names;
}
}  // namespace

Variables::Variables() : names_(empty_names()) {}

Variables::Variables(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Variables Variables::numbered(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return Variables(std::move(names));
}

std::optional<std::size_t> Variables::find(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

std::size_t Variables::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw UnknownVariable(std::string(name));
}

Variables Variables::concat(const Variables& other) const {
  std::vector<std::string> names = *names_;
  names.insert(names.end(), other.names().begin(), other.names().end());
  return Variables(std::move(names));
}

}  // namespace orbq
