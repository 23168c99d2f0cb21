#pragma once
// Minimal arbitrary-precision unsigned integer: little-endian base-2^32
// limbs with just the operations the pumping-bound arithmetic needs.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tilesim {

class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v) {  // NOLINT: implicit by design
    while (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v));
      v >>= 32;
    }
  }

  bool is_zero() const { return limbs_.empty(); }

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return a.limbs_ == b.limbs_;
  }

  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
      return a.limbs_.size() <=> b.limbs_.size();
    }
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    }
    return std::strong_ordering::equal;
  }

  BigUint& operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t sum = carry + limbs_[i];
      if (i < o.limbs_.size()) sum += o.limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(sum);
      carry = sum >> 32;
    }
    if (carry != 0) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return BigUint{};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] + carry +
                            static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j];
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
  }

  BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

  static BigUint pow(const BigUint& base, std::uint64_t exp) {
    BigUint r{1};
    BigUint b = base;
    while (exp != 0) {
      if (exp & 1) r *= b;
      b *= b;
      exp >>= 1;
    }
    return r;
  }

  static BigUint factorial(std::uint64_t n) {
    BigUint r{1};
    for (std::uint64_t i = 2; i <= n; ++i) r *= BigUint{i};
    return r;
  }

  // Remainder of division by a small divisor; quotient replaces *this.
  std::uint32_t div_small(std::uint32_t divisor) {
    if (divisor == 0) throw std::domain_error("division by zero");
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | limbs_[i];
      limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
      rem = cur % divisor;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    BigUint tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
      std::uint32_t chunk = tmp.div_small(1'000'000'000u);
      std::string part = std::to_string(chunk);
      if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
      out.insert(0, part);
    }
    return out;
  }

  // Value as uint64 when it fits; throws otherwise.
  std::uint64_t to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("value exceeds 64 bits");
    std::uint64_t v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = (v << 32) | limbs_[i];
    return v;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace tilesim
