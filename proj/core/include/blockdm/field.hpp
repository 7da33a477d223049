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

#ifndef BLOCKDM_FIELD_HPP_
#define BLOCKDM_FIELD_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace blockdm {

// Deterministic primality test for 64-bit integers (Miller-Rabin with a
// witness set that is exact below 2^64).
bool IsPrime(std::uint64_t n);

// Describes the coefficient field: GF(p) for a prime p < 2^31, or the
// rationals.
class FieldSpec {
 public:
  enum class Kind { kPrime, kRationals };

  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

  // Throws UsageError unless 2 <= p < 2^31 and p is prime.
  static FieldSpec Prime(std::uint64_t p);
  static FieldSpec Rationals() { return FieldSpec(Kind::kRationals, 0); }

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::kPrime; }
  // 0 for the rationals.
  std::uint32_t modulus() const { return modulus_; }

  // "GF(p)" or "Q".
  std::string ToString() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

// An element of a FieldSpec, always held in canonical form: residues in
// [0, p); fractions reduced with a positive denominator (zero is 0/1).
// Binary operations on elements of different fields throw UsageError.
class FieldElement {
 public:
  static FieldElement Zero(const FieldSpec& field);
  static FieldElement One(const FieldSpec& field);
  static FieldElement FromInteger(const FieldSpec& field, std::int64_t value);
  // Throws DivisionByZeroError when `denominator` is zero.
  static FieldElement FromFraction(const FieldSpec& field, const mpz_class& numerator,
                                   const mpz_class& denominator);
  // Text encoding: GF(p) takes a decimal integer (optionally signed, reduced
  // mod p); the rationals take "a" or "a/b" with an optional leading minus.
  // Throws UsageError on malformed text.
  static FieldElement Parse(const FieldSpec& field, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool IsZero() const;
  bool IsOne() const;

  // Residue in [0, p). Only valid over GF(p).
  std::uint32_t residue() const;
  // Only valid over the rationals.
  const mpq_class& rational() const;

  // Throws DivisionByZeroError for zero.
  FieldElement Inverse() const;

  std::string ToString() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  // Total order used for lexicographic normal-vector ordering: residues by
  // value over GF(p), numeric order over the rationals.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

 private:
  using Value = std::variant<std::uint32_t, mpq_class>;

  FieldElement(const FieldSpec& field, Value value) : field_(field), value_(std::move(value)) {}

  void CheckSameField(const FieldElement& other) const;

  FieldSpec field_;
  Value value_;
};

}  // namespace blockdm

#endif  // BLOCKDM_FIELD_HPP_
