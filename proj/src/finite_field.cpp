#include "tnt/finite_field.hpp"

#include <algorithm>
#include <utility>

#include "tnt/graph.hpp"

namespace tnt {

std::pair<int, int> prime_power_decomposition(int q)
{
    if (q < 2)
        return {0, 0};
    int p = 2;
    while (q % p != 0)
        ++p;
    int k = 0;
    int rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    return rest == 1 ? std::pair{p, k} : std::pair{0, 0};
}

namespace {

std::vector<int> digits(int x, int p, int k)
{
    std::vector<int> d(k);
    for (int i = 0; i < k; ++i, x /= p)
        d[i] = x % p;
    return d;
}

int from_digits(const std::vector<int>& d, int p)
{
    int x = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        x = x * p + d[i];
    return x;
}

// Product of a and b modulo the monic polynomial with low coefficients `low`.
int poly_mul(int a, int b, const std::vector<int>& low, int p, int k)
{
    auto da = digits(a, p, k);
    auto db = digits(b, p, k);
    std::vector<int> prod(2 * k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    // x^k = -low(x)
    for (int deg = 2 * k - 1; deg >= k; --deg) {
        int c = prod[deg];
        if (c == 0)
            continue;
        prod[deg] = 0;
        for (int i = 0; i < k; ++i)
            prod[deg - k + i] = ((prod[deg - k + i] - c * low[i]) % p + p) % p;
    }
    prod.resize(k);
    return from_digits(prod, p);
}

} // namespace

GaloisField::GaloisField(int q) : q_(q)
{
    auto [p, k] = prime_power_decomposition(q);
    if (p == 0 || q > 1024)
        throw InputError("field order " + std::to_string(q) + " is not a prime power in [2, 1024]");
    p_ = p;
    k_ = k;
    add_.resize(static_cast<std::size_t>(q) * q);
    for (int x = 0; x < q; ++x) {
        auto dx = digits(x, p, k);
        for (int y = 0; y < q; ++y) {
            auto dy = digits(y, p, k);
            std::vector<int> s(k);
            for (int i = 0; i < k; ++i)
                s[i] = (dx[i] + dy[i]) % p;
            add_[x * q + y] = from_digits(s, p);
        }
    }
    // First monic polynomial of degree k whose quotient ring has no zero divisors.
    mul_.resize(static_cast<std::size_t>(q) * q);
    for (int code = 0; code < q; ++code) {
        auto low = digits(code, p, k);
        if (low[0] == 0 && k > 1)
            continue;
        bool field = true;
        for (int x = 0; x < q && field; ++x)
            for (int y = 0; y < q; ++y) {
                int z = poly_mul(x, y, low, p, k);
                mul_[x * q + y] = z;
                if (x != 0 && y != 0 && z == 0) {
                    field = false;
                    break;
                }
            }
        if (field)
            break;
    }
    for (int g = 1; g < q; ++g) {
        int x = 1;
        int period = 0;
        do {
            x = mul(x, g);
            ++period;
        } while (x != 1);
        if (period == q - 1) {
            primitive_ = g;
            break;
        }
    }
}

int GaloisField::pow(int x, long e) const
{
    int out = 1;
    for (long i = 0; i < e; ++i)
        out = mul(out, x);
    return out;
}

std::vector<int> GaloisField::subgroup(int size) const
{
    if (size < 1 || (q_ - 1) % size != 0)
        throw InputError("subgroup order " + std::to_string(size) + " does not divide q - 1");
    int step = pow(primitive_, (q_ - 1) / size);
    std::vector<int> h;
    int x = 1;
    for (int i = 0; i < size; ++i) {
        h.push_back(x);
        x = mul(x, step);
    }
    std::sort(h.begin(), h.end());
    return h;
}

} // namespace tnt
