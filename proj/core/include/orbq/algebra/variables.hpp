#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbq {

// Ordered set of variable names shared by every polynomial of one coordinate
// system. Copies share storage; comparison is by content.
class Variables {
 public:
  Variables();
  explicit Variables(std::vector<std::string> names);

  // prefix1, prefix2, ..., prefix<count>.
  static Variables numbered(std::string_view prefix, std::size_t count);

  std::size_t size() const noexcept { return names_->size(); }
  bool empty() const noexcept { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;

  Variables concat(const Variables& other) const;

  friend bool operator==(const Variables& a, const Variables& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace orbq
