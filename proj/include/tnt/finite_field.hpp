#pragma once

#include <vector>

namespace tnt {

/// GF(p^k) for small orders. Elements are 0..q-1, read as base-p digit
/// vectors of polynomials modulo a monic irreducible of degree k; 0 and 1
/// are the field's zero and one.
class GaloisField {
public:
    /// Throws InputError unless q is a prime power in [2, 1024].
    explicit GaloisField(int q);

    int order() const noexcept { return q_; }
    int characteristic() const noexcept { return p_; }
    int degree() const noexcept { return k_; }

    int add(int x, int y) const { return add_[x * q_ + y]; }
    int mul(int x, int y) const { return mul_[x * q_ + y]; }
    int pow(int x, long e) const;
    /// A fixed generator of the multiplicative group (smallest such element).
    int primitive() const noexcept { return primitive_; }
    /// The unique subgroup of the multiplicative group with `size` elements,
    /// sorted ascending. Throws InputError unless size divides q - 1.
    std::vector<int> subgroup(int size) const;

private:
    int q_;
    int p_;
    int k_;
    int primitive_ = 0;
    std::vector<int> add_;
    std::vector<int> mul_;
};

/// (p, k) with q = p^k, or (0, 0) when q is not a prime power.
std::pair<int, int> prime_power_decomposition(int q);

} // namespace tnt
