#include "curveflow/diffpoly.hpp"

#include <algorithm>
#include <map>

namespace curveflow {

Monomial Monomial::k(unsigned order, unsigned exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(order, exponent);
    return m;
}

Monomial Monomial::g(unsigned power) {
    Monomial m;
    m.g_power_ = power;
    return m;
}

unsigned Monomial::degree() const noexcept {
    unsigned d = 0;
    for (const auto& [order, exp] : factors_) d += exp;
    return d;
}

unsigned Monomial::max_order() const noexcept {
    return factors_.empty() ? 0 : factors_.back().first;
}

unsigned Monomial::exponent_of(unsigned order) const noexcept {
    for (const auto& [o, e] : factors_)
        if (o == order) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.g_power_ = g_power_ + other.g_power_;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a, ++b;
        }
    }
    return out;
}

Monomial Monomial::with_exponent(unsigned order, unsigned exponent) const {
    Monomial out;
    out.g_power_ = g_power_;
    bool placed = false;
    for (const auto& [o, e] : factors_) {
        if (o == order) {
            if (exponent > 0) out.factors_.emplace_back(o, exponent);
            placed = true;
        } else {
            out.factors_.emplace_back(o, e);
        }
    }
    if (!placed && exponent > 0) {
        out.factors_.emplace_back(order, exponent);
        std::sort(out.factors_.begin(), out.factors_.end());
    }
    return out;
}

bool Monomial::canonical_less(const Monomial& a, const Monomial& b) {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.g_power_ != b.g_power_) return a.g_power_ < b.g_power_;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        if (i->first != j->first) return i->first < j->first;
        if (i->second != j->second) return i->second > j->second;
        ++i, ++j;
    }
    // Equal degree with all shared factors matched: both must be exhausted.
    return false;
}

namespace {

struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::canonical_less(a, b);
    }
};

using TermMap = std::map<Monomial, Rational, CanonicalLess>;

DiffPoly from_map(TermMap&& map) {
    std::vector<DiffPoly::Term> terms;
    terms.reserve(map.size());
    for (auto& [mono, coeff] : map)
        if (coeff != 0) terms.emplace_back(mono, std::move(coeff));
    return DiffPoly::from_terms(std::move(terms));
}

}  // namespace

DiffPoly::DiffPoly(Rational constant) {
    if (constant != 0) terms_.emplace_back(Monomial{}, std::move(constant));
}

DiffPoly::DiffPoly(long constant) : DiffPoly(Rational(constant)) {}

DiffPoly DiffPoly::k(unsigned order) { return term(1, Monomial::k(order)); }

DiffPoly DiffPoly::g() { return term(1, Monomial::g(1)); }

DiffPoly DiffPoly::term(Rational coeff, Monomial mono) {
    DiffPoly p;
    if (coeff != 0) p.terms_.emplace_back(std::move(mono), std::move(coeff));
    return p;
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return Monomial::canonical_less(a.first, b.first);
    });
    DiffPoly p;
    for (auto& t : terms) {
        if (t.second == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

unsigned DiffPoly::degree() const noexcept {
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.degree());
    return d;
}

unsigned DiffPoly::max_order() const noexcept {
    unsigned n = 0;
    for (const auto& [mono, coeff] : terms_) n = std::max(n, mono.max_order());
    return n;
}

bool DiffPoly::depends_on_k() const noexcept {
    for (const auto& [mono, coeff] : terms_)
        if (!mono.factors().empty()) return true;
    return false;
}

bool DiffPoly::depends_on_g() const noexcept {
    for (const auto& [mono, coeff] : terms_)
        if (mono.g_power() > 0) return true;
    return false;
}

Rational DiffPoly::coefficient(const Monomial& mono) const {
    for (const auto& [m, c] : terms_)
        if (m == mono) return c;
    return 0;
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly out = *this;
    for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
    return out;
}

DiffPoly DiffPoly::operator+(const DiffPoly& other) const {
    // Merge of two canonically sorted term lists.
    std::vector<Term> out;
    out.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin(), b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() ||
            (a != terms_.end() && Monomial::canonical_less(a->first, b->first))) {
            out.push_back(*a++);
        } else if (a == terms_.end() || Monomial::canonical_less(b->first, a->first)) {
            out.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (c != 0) out.emplace_back(a->first, std::move(c));
            ++a, ++b;
        }
    }
    DiffPoly p;
    p.terms_ = std::move(out);
    return p;
}

DiffPoly DiffPoly::operator-(const DiffPoly& other) const { return *this + (-other); }

DiffPoly DiffPoly::operator*(const DiffPoly& other) const {
    TermMap map;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) map[ma.times(mb)] += ca * cb;
    return from_map(std::move(map));
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& other) { return *this = *this + other; }
DiffPoly& DiffPoly::operator-=(const DiffPoly& other) { return *this = *this - other; }
DiffPoly& DiffPoly::operator*=(const DiffPoly& other) { return *this = *this * other; }

DiffPoly DiffPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    DiffPoly out = *this;
    for (auto& [mono, coeff] : out.terms_) coeff *= c;
    return out;
}

DiffPoly DiffPoly::pow(unsigned exponent) const {
    DiffPoly out{Rational(1)};
    for (unsigned i = 0; i < exponent; ++i) out *= *this;
    return out;
}

DiffPoly DiffPoly::partial(unsigned order) const {
    std::vector<Term> out;
    for (const auto& [mono, coeff] : terms_) {
        const unsigned e = mono.exponent_of(order);
        if (e == 0) continue;
        out.emplace_back(mono.with_exponent(order, e - 1), coeff * e);
    }
    return from_terms(std::move(out));
}

DiffPoly DiffPoly::integrate_in(unsigned order) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [mono, coeff] : terms_) {
        const unsigned e = mono.exponent_of(order);
        out.emplace_back(mono.with_exponent(order, e + 1), coeff / (e + 1));
    }
    return from_terms(std::move(out));
}

DiffPoly DiffPoly::constant_part() const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (t.first.is_constant()) out.push_back(t);
    return from_terms(std::move(out));
}

DiffPoly DiffPoly::without_constant() const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (!t.first.is_constant()) out.push_back(t);
    return from_terms(std::move(out));
}

DiffPoly DiffPoly::coeff_of_power(unsigned order, unsigned power) const {
    std::vector<Term> out;
    for (const auto& [mono, coeff] : terms_)
        if (mono.exponent_of(order) == power) out.emplace_back(mono.with_exponent(order, 0), coeff);
    return from_terms(std::move(out));
}

unsigned DiffPoly::degree_in(unsigned order) const noexcept {
    unsigned d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.exponent_of(order));
    return d;
}

DiffPoly DiffPoly::substitute_g(const Rational& value) const {
    std::vector<Term> out;
    for (const auto& [mono, coeff] : terms_) {
        const unsigned gp = mono.g_power();
        if (gp == 0) {
            out.emplace_back(mono, coeff);
            continue;
        }
        Rational scale = 1;
        for (unsigned i = 0; i < gp; ++i) scale *= value;
        Monomial stripped;
        for (const auto& [o, e] : mono.factors()) stripped = stripped.times(Monomial::k(o, e));
        out.emplace_back(stripped, coeff * scale);
    }
    return from_terms(std::move(out));
}

DiffPoly total_derivative(const DiffPoly& p) {
    TermMap map;
    for (const auto& [mono, coeff] : p.terms()) {
        for (const auto& [order, exp] : mono.factors()) {
            Monomial lowered = mono.with_exponent(order, exp - 1);
            map[lowered.times(Monomial::k(order + 1))] += coeff * exp;
        }
    }
    return from_map(std::move(map));
}

DiffPoly total_derivative(const DiffPoly& p, unsigned times) {
    DiffPoly out = p;
    for (unsigned i = 0; i < times; ++i) out = total_derivative(out);
    return out;
}

DiffPoly euler_derivative(const DiffPoly& p) {
    DiffPoly out;
    const unsigned top = p.max_order();
    for (unsigned m = 0; m <= top; ++m) {
        DiffPoly contrib = total_derivative(p.partial(m), m);
        out += (m % 2 == 0) ? contrib : -contrib;
    }
    return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace curveflow
