#ifndef NZFLOW_ALGEBRA_HPP
#define NZFLOW_ALGEBRA_HPP

#include <string>
#include <vector>

#include "nzflow/errors.hpp"

namespace nzflow {

enum class GroupKind { Cyclic, Field };

/// Element of a value group. One digit in [0, k) for Z_k; n coefficients
/// over Z_p, constant term first, for GF(p^n).
struct GroupElement {
    std::vector<int> d;

    bool operator==(const GroupElement&) const = default;
    bool is_zero() const;
};

/// Additive endomorphism of the value group: a multiplier residue for Z_k,
/// an n x n matrix over Z_p (row-major) for the additive group of GF(p^n).
struct Endomorphism {
    int dim = 1;
    std::vector<int> entries;

    static Endomorphism multiplier(int value);
    static Endomorphism matrix(int n, std::vector<int> row_major);
    static Endomorphism identity(int n);
    static Endomorphism zero(int n);
};

/// A finite value group: Z_k, or GF(p^n) with an explicit irreducible
/// modulus. All element arithmetic is performed through this class so the
/// modulus and digit ranges are always in scope.
class GroupSpec {
public:
    /// Default state is an inert placeholder; build real groups through the
    /// named constructors.
    GroupSpec() = default;

    /// Parses `z:<k>` or `gf:<p>:<n>[:<c0,c1,...,cn>]`. When field
    /// coefficients are omitted the modulus is the lexicographically
    /// smallest monic irreducible polynomial of degree n over Z_p,
    /// constant term compared first.
    static GroupSpec parse(const std::string& descriptor);
    static GroupSpec cyclic(int k);
    static GroupSpec field(int p, int n);
    static GroupSpec field(int p, int n, std::vector<int> modulus);

    GroupKind kind() const { return kind_; }
    bool is_field() const { return kind_ == GroupKind::Field; }
    int order() const { return order_; }
    int characteristic() const { return is_field() ? p_ : k_; }
    int degree() const { return is_field() ? n_ : 1; }
    const std::vector<int>& modulus() const;

    GroupElement zero() const;
    GroupElement one() const; // field only
    GroupElement element(std::vector<int> digits) const;

    GroupElement add(const GroupElement& a, const GroupElement& b) const;
    GroupElement neg(const GroupElement& a) const;
    GroupElement sub(const GroupElement& a, const GroupElement& b) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const; // field only
    GroupElement inv(const GroupElement& a) const;                       // field only, a != 0
    GroupElement pow(const GroupElement& a, long long e) const;          // field only

    /// First element, in lexicographic coefficient order, whose
    /// multiplicative order is p^n - 1. Field kind only.
    GroupElement primitive_element() const;

    /// sigma(a): multiplication mod k, or matrix-vector product over Z_p.
    GroupElement apply(const Endomorphism& sigma, const GroupElement& a) const;

    /// Canonical enumeration: index treats the constant term as the most
    /// significant digit, so element_at(0) is zero.
    int index_of(const GroupElement& a) const;
    GroupElement element_at(int index) const;

    /// Discrete log base b over the b-power table; -1 when a is zero.
    int discrete_log(const GroupElement& b, const GroupElement& a) const;

    std::string descriptor() const; // canonical, round-trips through parse
    std::string format(const GroupElement& a) const;
    GroupElement parse_element(const std::string& text) const;

    bool operator==(const GroupSpec&) const = default;

private:
    void check(const GroupElement& a) const;

    GroupKind kind_ = GroupKind::Cyclic;
    int k_ = 0;
    int p_ = 0;
    int n_ = 0;
    int order_ = 0;
    std::vector<int> mod_; // n+1 coefficients, constant first, leading 1
};

bool is_prime(int p);

/// True when f (monic, constant term first) has no monic divisor of degree
/// 1..deg-1 over Z_p.
bool is_irreducible(const std::vector<int>& f, int p);

} // namespace nzflow

#endif
