#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twcy/rational.hpp"

namespace twcy {

// Sorted (variable, exponent) pairs; odd variables appear with exponent 1.
typedef std::vector<std::pair<int, int>> Monomial;
typedef std::map<Monomial, Rational> SPoly;

struct VarSpec {
    int degree = 0;
    int weight = 0;
    std::string name;
};

/**
 * Graded-commutative polynomial ring over Q. The parity of a variable is its
 * degree mod 2; monomials are stored in increasing variable order and the
 * Koszul sign is applied when factors are reordered.
 */
class SuperRing {
public:
    int add_var(int degree, int weight, std::string name);
    std::size_t num_vars() const { return vars_.size(); }
    const VarSpec& var(int v) const { return vars_.at(v); }
    bool odd(int v) const { return (vars_[v].degree & 1) != 0; }

    SPoly one() const { return SPoly{{Monomial{}, Rational(1)}}; }
    SPoly variable(int v, const Rational& c = 1) const;
    SPoly mul(const SPoly& a, const SPoly& b) const;
    void add(SPoly& a, const SPoly& b, const Rational& s = 1) const;
    SPoly scale(const SPoly& a, const Rational& s) const;

    int degree(const Monomial& m) const;
    int weight(const Monomial& m) const;
    int degree(const SPoly& p) const;

    // Derivation of the given parity with prescribed values on variables;
    // variables missing from on_vars (or mapped to an empty poly) go to zero.
    SPoly derivation(const SPoly& p, const std::map<int, SPoly>& on_vars, int parity) const;
    // Even algebra map; variables missing from on_vars are fixed.
    SPoly algebra_map(const SPoly& p, const std::map<int, SPoly>& on_vars) const;

    std::string text(const Monomial& m) const;
    std::string text(const SPoly& p) const;

private:
    // Product of monomials: zero flag, sign, result.
    bool mul_monomial(const Monomial& a, const Monomial& b, Monomial& out, int& sign) const;
    std::vector<VarSpec> vars_;
};

}  // namespace twcy
