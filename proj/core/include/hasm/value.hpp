#pragma once

#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <string>

#include "hasm/errors.hpp"

namespace hasm {

enum class Sort : uint8_t { Real, Bool };

inline const char* sort_name(Sort s) { return s == Sort::Real ? "real" : "bool"; }

/// A value of the fixed background structure: a finite 64-bit float or a
/// boolean. Real equality is bitwise, so distinct NaN payloads can never
/// leak in and +0.0 != -0.0.
class Value {
public:
  Value() : sort_(Sort::Real), real_(0.0) {}

  static Value real(double v) {
    if (!std::isfinite(v)) {
      throw DomainError("non-finite real value");
    }
    Value out;
    out.sort_ = Sort::Real;
    out.real_ = v;
    return out;
  }

  static Value boolean(bool b) {
    Value out;
    out.sort_ = Sort::Bool;
    out.bool_ = b;
    return out;
  }

  Sort sort() const { return sort_; }
  bool is_real() const { return sort_ == Sort::Real; }
  bool is_bool() const { return sort_ == Sort::Bool; }

  double as_real() const {
    if (sort_ != Sort::Real) throw SortError("expected a real value");
    return real_;
  }

  bool as_bool() const {
    if (sort_ != Sort::Bool) throw SortError("expected a boolean value");
    return bool_;
  }

  /// Bit pattern used for equality, ordering and hashing.
  uint64_t bits() const {
    return sort_ == Sort::Real ? std::bit_cast<uint64_t>(real_) : uint64_t(bool_);
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.sort_ == b.sort_ && a.bits() == b.bits();
  }

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.sort_ != b.sort_) return a.sort_ <=> b.sort_;
    return a.bits() <=> b.bits();
  }

  std::string str() const;

private:
  Sort sort_;
  union {
    double real_;
    bool bool_;
  };
};

/// Default value a state reports for an unmapped location of this sort.
inline Value default_value(Sort s) {
  return s == Sort::Real ? Value::real(0.0) : Value::boolean(false);
}

}  // namespace hasm
