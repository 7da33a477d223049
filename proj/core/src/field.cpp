// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "blockdm/field.hpp"

#include <array>
#include <charconv>
#include <string>

#include "blockdm/errors.hpp"

namespace blockdm {
namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<Wide>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool IsDecimal(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::Prime(std::uint64_t p) {
  if (p < 2 || p >= kMaxModulus) {
    throw UsageError("field modulus " + std::to_string(p) + " is outside [2, 2^31)");
  }
  if (!IsPrime(p)) {
    throw UsageError("field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(Kind::kPrime, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::ToString() const {
  if (kind_ == Kind::kRationals) return "Q";
  return "GF(" + std::to_string(modulus_) + ")";
}

FieldElement FieldElement::Zero(const FieldSpec& field) { return FromInteger(field, 0); }

FieldElement FieldElement::One(const FieldSpec& field) { return FromInteger(field, 1); }

FieldElement FieldElement::FromInteger(const FieldSpec& field, std::int64_t value) {
  if (field.is_prime_field()) {
    std::int64_t p = field.modulus();
    std::int64_t r = value % p;
    if (r < 0) r += p;
    return FieldElement(field, static_cast<std::uint32_t>(r));
  }
  return FieldElement(field, mpq_class(mpz_class(std::to_string(value))));
}

FieldElement FieldElement::FromFraction(const FieldSpec& field, const mpz_class& numerator,
                                        const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZeroError("zero denominator");
  if (field.is_prime_field()) {
    mpz_class p = field.modulus();
    mpz_class num = numerator % p;
    mpz_class den = denominator % p;
    if (num < 0) num += p;
    if (den < 0) den += p;
    if (den == 0) throw DivisionByZeroError("denominator vanishes in " + field.ToString());
    FieldElement a(field, static_cast<std::uint32_t>(num.get_ui()));
    FieldElement b(field, static_cast<std::uint32_t>(den.get_ui()));
    return a / b;
  }
  mpq_class q(numerator, denominator);
  q.canonicalize();
  return FieldElement(field, std::move(q));
}

FieldElement FieldElement::Parse(const FieldSpec& field, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    if (field.is_prime_field()) {
      throw UsageError("'" + std::string(text) + "' is not a decimal residue for " + field.ToString());
    }
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!IsDecimal(num_text) || !IsDecimal(den_text)) {
    throw UsageError("'" + std::string(text) + "' is not a valid element of " + field.ToString());
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw UsageError("'" + std::string(text) + "' has a zero denominator");
  }
  if (negative) num = -num;
  return FromFraction(field, num, den);
}

bool FieldElement::IsZero() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool FieldElement::IsOne() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t FieldElement::residue() const {
  if (!field_.is_prime_field()) throw UsageError("residue() requested for a rational");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& FieldElement::rational() const {
  if (field_.is_prime_field()) throw UsageError("rational() requested for a GF(p) element");
  return std::get<mpq_class>(value_);
}

FieldElement FieldElement::Inverse() const {
  if (IsZero()) throw DivisionByZeroError("inverse of zero in " + field_.ToString());
  if (field_.is_prime_field()) {
    std::uint64_t p = field_.modulus();
    return FieldElement(field_, static_cast<std::uint32_t>(PowMod(residue(), p - 2, p)));
  }
  mpq_class q = 1 / std::get<mpq_class>(value_);
  q.canonicalize();
  return FieldElement(field_, std::move(q));
}

std::string FieldElement::ToString() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str(10);
}

void FieldElement::CheckSameField(const FieldElement& other) const {
  if (!(field_ == other.field_)) {
    throw UsageError("mixed-field operands: " + field_.ToString() + " and " + other.field_.ToString());
  }
}

FieldElement FieldElement::operator-() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
    return FieldElement(field_, *r == 0 ? 0u : field_.modulus() - *r);
  }
  return FieldElement(field_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  CheckSameField(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    std::uint64_t sum = std::uint64_t{*r} + other.residue();
    if (sum >= field_.modulus()) sum -= field_.modulus();
    *r = static_cast<std::uint32_t>(sum);
  } else {
    std::get<mpq_class>(value_) += other.rational();
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  CheckSameField(other);
  return *this += -other;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  CheckSameField(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    *r = static_cast<std::uint32_t>(std::uint64_t{*r} * other.residue() % field_.modulus());
  } else {
    std::get<mpq_class>(value_) *= other.rational();
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  CheckSameField(other);
  return *this *= other.Inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) {
  a.CheckSameField(b);
  if (a.field_.is_prime_field()) return a.residue() <=> b.residue();
  int c = cmp(a.rational(), b.rational());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace blockdm
