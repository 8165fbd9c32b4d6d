#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypersing {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (non-isolated, constant, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A reduction-step, term-count or cell budget was exhausted.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Canonical "p/q" text; integers print without a denominator.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (q > 0). Throws Error on malformed text.
Rational parse_rational(std::string_view text);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);

/// Rational extended by +infinity.
class ExtRat {
public:
    ExtRat() = default;
    ExtRat(Rational v) : value_(std::move(v)) {}  // NOLINT: implicit by design of arithmetic use

    static ExtRat infinity() { return ExtRat{}; }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const;

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b);
    friend bool operator==(const ExtRat& a, const ExtRat& b);
    friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

private:
    std::optional<Rational> value_;
};

/// "inf" or the rational text.
std::string to_string(const ExtRat& q);

/// Natural number extended by +infinity (colengths, orders, Milnor numbers).
class ExtNat {
public:
    ExtNat() = default;
    ExtNat(std::uint64_t v) : value_(v) {}  // NOLINT

    static ExtNat infinity() { return ExtNat{}; }

    bool is_infinite() const { return !value_.has_value(); }
    bool is_finite() const { return value_.has_value(); }
    std::uint64_t value() const;

    friend bool operator==(const ExtNat& a, const ExtNat& b) = default;
    friend std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b);

private:
    std::optional<std::uint64_t> value_;
};

std::string to_string(const ExtNat& n);

}  // namespace hypersing
