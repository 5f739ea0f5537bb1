#include "oos/field.hpp"

namespace oos {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::parse(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.size() >= 2 && name[0] == 'F') {
        int p = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') fail("bad field name: " + name);
            p = p * 10 + (name[i] - '0');
            if (p > kMaxPrime) break;
        }
        return prime(p);
    }
    fail("bad field name (expected \"Q\" or \"F<p>\"): " + name);
}

Rat Field::normalize(const Rat& x) const {
    if (is_rationals()) return x;
    BigInt den = x.den() % p_;
    require(den != 0, "denominator not invertible mod " + std::to_string(p_));
    BigInt num = x.num() % p_;
    if (num < 0) num += p_;
    // n/d -> n * d^(p-2) mod p
    BigInt dinv = 1, base = den, e = p_ - 2;
    while (e > 0) {
        if (e % 2 == 1) dinv = dinv * base % p_;
        base = base * base % p_;
        e /= 2;
    }
    return Rat(num * dinv % p_);
}

Rat Field::div(const Rat& a, const Rat& b) const {
    require(!normalize(b).is_zero(), "field division by zero");
    return normalize(a / b);
}

Rat Field::inv(const Rat& a) const { return div(Rat(1), a); }

} // namespace oos
