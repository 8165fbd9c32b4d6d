#include "hypersing/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace hypersing {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

void require_same_vars(const Poly& a, const Poly& b) {
    if (!(a.vars() == b.vars())) throw DomainError("polynomials live over different variable sets");
}

}  // namespace

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw DomainError("a variable set needs at least one variable");
    if (names_.size() > kMaxArity)
        throw DomainError("arity " + std::to_string(names_.size()) + " exceeds the cap of " +
                          std::to_string(kMaxArity));
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!is_identifier(n)) throw DomainError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw DomainError("duplicate variable '" + n + "'");
    }
}

VarSet VarSet::parse_list(std::string_view text) {
    std::vector<std::string> names;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            names.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    names.push_back(cur);
    return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

VarSet VarSet::without(std::size_t i) const {
    std::vector<std::string> rest;
    for (std::size_t j = 0; j < names_.size(); ++j)
        if (j != i) rest.push_back(names_[j]);
    return VarSet(std::move(rest));
}

VarSet VarSet::subset(std::span<const std::size_t> indices) const {
    std::vector<std::string> sub;
    for (auto i : indices) sub.push_back(names_.at(i));
    return VarSet(std::move(sub));
}

// -------------------------------------------------------------- Exponent

Exponent::Exponent(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
    if (n > kMaxArity) throw DomainError("exponent arity exceeds cap");
}

Exponent::Exponent(std::initializer_list<std::uint32_t> entries) : Exponent(entries.size()) {
    std::copy(entries.begin(), entries.end(), e_.begin());
}

std::uint64_t Exponent::degree() const {
    return std::accumulate(e_.begin(), e_.begin() + n_, std::uint64_t{0});
}

bool Exponent::divides(const Exponent& other) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
    Exponent r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] + b.e_[i];
    return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
    Exponent r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = a.e_[i] - b.e_[i];
    return r;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
    Exponent r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
    return r;
}

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// ------------------------------------------------------------------ Poly

Poly Poly::constant(VarSet vars, const Rational& c) {
    Poly p(std::move(vars));
    p.add_term(Exponent(p.arity()), c);
    return p;
}

Poly Poly::variable(VarSet vars, std::size_t i) {
    Exponent e(vars.size());
    e[i] = 1;
    return monomial(std::move(vars), e);
}

Poly Poly::monomial(VarSet vars, const Exponent& e, const Rational& c) {
    Poly p(std::move(vars));
    p.add_term(e, c);
    return p;
}

Rational Poly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Exponent(arity())); }

void Poly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other) {
    require_same_vars(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& other) {
    require_same_vars(*this, other);
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return multiply(a, b); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Poly multiply(const Poly& a, const Poly& b, std::size_t term_cap) {
    require_same_vars(a, b);
    Poly r(a.vars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            r.add_term(ea + eb, ca * cb);
        }
        if (r.term_count() > term_cap)
            throw BudgetExceeded("product exceeds the term cap of " + std::to_string(term_cap));
    }
    return r;
}

Poly power(const Poly& a, std::uint32_t k, std::size_t term_cap) {
    Poly result = Poly::constant(a.vars(), 1);
    Poly base = a;
    while (k > 0) {
        if (k & 1u) result = multiply(result, base, term_cap);
        k >>= 1;
        if (k > 0) base = multiply(base, base, term_cap);
    }
    return result;
}

// -------------------------------------------------------------- printing

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        bool negative = sgn(c) < 0;
        Rational mag = abs(c);
        if (first) {
            if (negative) out << '-';
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        bool need_star = false;
        if (mag != 1 || e.is_zero()) {
            out << to_string(mag);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << '*';
            out << f.vars().name(i);
            if (e[i] > 1) out << '^' << e[i];
            need_star = true;
        }
    }
    return out.str();
}

// --------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

    Poly parse() {
        Poly result(vars_);
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        add_signed(result, parse_term(), negate);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c != '+' && c != '-') throw ParseError(std::string("unexpected '") + c + "'", pos_);
            ++pos_;
            add_signed(result, parse_term(), c == '-');
        }
        return result;
    }

private:
    struct Term {
        Rational coeff = 1;
        Exponent exp;
    };

    void add_signed(Poly& p, const Term& t, bool negate) {
        p.add_term(t.exp, negate ? Rational(-t.coeff) : t.coeff);
    }

    Term parse_term() {
        Term t{Rational(1), Exponent(vars_.size())};
        parse_factor(t);
        while (true) {
            skip_ws();
            if (at_end()) break;
            char c = peek();
            if (c == '*') {
                ++pos_;
                skip_ws();
                if (at_end()) throw ParseError("expected factor after '*'", pos_);
                parse_factor(t);
            } else if (std::isalnum(static_cast<unsigned char>(c))) {
                parse_factor(t);  // implicit product
            } else {
                break;
            }
        }
        return t;
    }

    void parse_factor(Term& t) {
        skip_ws();
        if (at_end()) throw ParseError("expected a coefficient or variable", pos_);
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num(read_digits());
            Integer den = 1;
            skip_ws();
            if (!at_end() && peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t at = pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected a positive denominator", pos_);
                den = Integer(read_digits());
                if (den == 0) throw ParseError("zero denominator", at);
            }
            Rational q(num, den);
            q.canonicalize();
            t.coeff *= q;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            std::string name;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                name.push_back(text_[pos_++]);
            auto idx = vars_.index_of(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", at);
            std::uint64_t k = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                std::size_t exp_at = pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected a natural exponent", pos_);
                std::string digits = read_digits();
                if (digits.size() > 9) throw ParseError("exponent too large", exp_at);
                k = std::stoull(digits);
            }
            std::uint64_t total = std::uint64_t{t.exp[*idx]} + k;
            if (total > 1'000'000) throw ParseError("exponent too large", at);
            t.exp[*idx] = static_cast<std::uint32_t>(total);
        } else {
            throw ParseError(std::string("unexpected '") + c + "'", pos_);
        }
    }

    std::string read_digits() {
        std::string d;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(text_[pos_++]);
        return d;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    std::string_view text_;
    const VarSet& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarSet& vars) { return Parser(text, vars).parse(); }

std::vector<std::string> collect_identifiers(std::string_view text) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::string name;
            while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                name.push_back(text[i++]);
            if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i]))) ++i;
        } else {
            ++i;
        }
    }
    return out;
}

// ------------------------------------------------------------ operations

Poly partial_derivative(const Poly& f, std::size_t i) {
    if (i >= f.arity()) throw DomainError("derivative index out of range");
    Poly d(f.vars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponent lowered = e;
        lowered[i] -= 1;
        d.add_term(lowered, c * e[i]);
    }
    return d;
}

Poly substitute(const Poly& f, const std::map<std::size_t, Poly>& assignments, const VarSet& target,
                std::size_t term_cap) {
    std::vector<Poly> images;
    for (std::size_t i = 0; i < f.arity(); ++i) {
        auto it = assignments.find(i);
        if (it != assignments.end()) {
            if (!(it->second.vars() == target))
                throw DomainError("substituted polynomial does not live in the target variable set");
            images.push_back(it->second);
        } else {
            auto j = target.index_of(f.vars().name(i));
            if (!j) throw DomainError("variable '" + f.vars().name(i) + "' has no image in the target set");
            images.push_back(Poly::variable(target, *j));
        }
    }
    // Cache powers per variable since exponents repeat across terms.
    std::vector<std::map<std::uint32_t, Poly>> cache(f.arity());
    auto pow_of = [&](std::size_t i, std::uint32_t k) -> const Poly& {
        auto it = cache[i].find(k);
        if (it == cache[i].end()) it = cache[i].emplace(k, power(images[i], k, term_cap)).first;
        return it->second;
    };
    Poly result(target);
    for (const auto& [e, c] : f.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < f.arity() && !term.is_zero(); ++i) {
            if (e[i] == 0) continue;
            term = multiply(term, pow_of(i, e[i]), term_cap);
        }
        result += term;
        if (result.term_count() > term_cap)
            throw BudgetExceeded("substitution exceeds the term cap of " + std::to_string(term_cap));
    }
    return result;
}

Poly embed(const Poly& f, const VarSet& target) {
    std::vector<std::size_t> map(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) {
        auto j = target.index_of(f.vars().name(i));
        if (!j) throw DomainError("variable '" + f.vars().name(i) + "' missing from target set");
        map[i] = *j;
    }
    Poly r(target);
    for (const auto& [e, c] : f.terms()) {
        Exponent t(target.size());
        for (std::size_t i = 0; i < f.arity(); ++i) t[map[i]] = e[i];
        r.add_term(t, c);
    }
    return r;
}

ExtNat order_at_origin(const Poly& f) {
    if (f.is_zero()) return ExtNat::infinity();
    return f.terms().begin()->first.degree();  // grlex ascending: first term has least degree
}

Poly homogeneous_part(const Poly& f, std::uint64_t k) {
    Poly r(f.vars());
    for (const auto& [e, c] : f.terms())
        if (e.degree() == k) r.add_term(e, c);
    return r;
}

WeightVector::WeightVector(std::vector<Rational> w) : w_(std::move(w)) {
    for (const auto& x : w_)
        if (sgn(x) <= 0) throw DomainError("weights must be positive");
}

WeightedDegree weighted_degree(const Poly& f, const WeightVector& w) {
    return weighted_degree(f, std::span<const Rational>(w.values()));
}

WeightedDegree weighted_degree(const Poly& f, std::span<const Rational> w) {
    if (w.size() != f.arity()) throw DomainError("weight vector length differs from arity");
    if (f.is_zero()) return {ExtRat::infinity(), true};
    std::optional<Rational> lo;
    std::optional<Rational> hi;
    for (const auto& [e, c] : f.terms()) {
        Rational d = 0;
        for (std::size_t i = 0; i < e.size(); ++i) d += w[i] * e[i];
        if (!lo || d < *lo) lo = d;
        if (!hi || d > *hi) hi = d;
    }
    return {ExtRat(*lo), *lo == *hi};
}

}  // namespace hypersing
