#include "hypersing/rational.hpp"

#include <cctype>

namespace hypersing {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
    auto bad = [&] { return Error("malformed rational '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    auto read_int = [&](bool allow_sign) {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == digits) throw bad();
        std::string s(text.substr(start, pos - start));
        if (!s.empty() && s[0] == '+') s.erase(0, 1);
        return Integer(s);
    };
    Integer num = read_int(true);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_int(false);
        if (den == 0) throw bad();
    }
    if (pos != text.size()) throw bad();
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

const Rational& ExtRat::value() const {
    if (!value_) throw Error("value of an infinite ExtRat requested");
    return *value_;
}

ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) return ExtRat::infinity();
    return ExtRat(Rational(*a.value_ + *b.value_));
}

bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return *a.value_ == *b.value_;
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string to_string(const ExtRat& q) { return q.is_infinite() ? "inf" : to_string(q.value()); }

std::uint64_t ExtNat::value() const {
    if (!value_) throw Error("value of an infinite ExtNat requested");
    return *value_;
}

std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite()) {
        if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
        return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return *a.value_ <=> *b.value_;
}

std::string to_string(const ExtNat& n) { return n.is_infinite() ? "inf" : std::to_string(n.value()); }

}  // namespace hypersing
