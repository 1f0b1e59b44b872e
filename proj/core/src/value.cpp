#include "hasm/value.hpp"

#include <charconv>

namespace hasm {

std::string Value::str() const {
  if (sort_ == Sort::Bool) return bool_ ? "true" : "false";
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, real_);
  return std::string(buf, r.ptr);
}

}  // namespace hasm
