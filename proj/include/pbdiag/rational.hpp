#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace pbdiag {

using Rational = mpq_class;

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a diagram violates the valence or connectivity invariants.
struct ConstraintError : DomainError {
    using DomainError::DomainError;
};

// Raised when an enumeration or permutation search exceeds its resource bound.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Always "p/q", including q = 1, so the text form is unambiguous.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

inline int sign_of(const Rational& q) { return sgn(q); }

// Finite formal sum with exact coefficients; zero coefficients are never stored.
template <class Key, class Tag>
struct Combo {
    using key_type = Key;
    std::map<Key, Rational> terms;

    void add(const Key& k, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms.erase(it);
        }
    }
    void add(const Combo& o, const Rational& scale = 1) {
        for (const auto& [k, c] : o.terms) add(k, c * scale);
    }
    Rational coeff(const Key& k) const {
        auto it = terms.find(k);
        return it == terms.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    Combo scaled(const Rational& s) const {
        Combo r;
        r.add(*this, s);
        return r;
    }
    friend Combo operator+(Combo a, const Combo& b) {
        a.add(b);
        return a;
    }
    friend Combo operator-(Combo a, const Combo& b) {
        a.add(b, -1);
        return a;
    }
    bool operator==(const Combo&) const = default;
};

}  // namespace pbdiag
