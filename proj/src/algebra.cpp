#include "nzflow/algebra.hpp"

#include <sstream>
#include <utility>

namespace nzflow {

namespace {

int mod_pos(long long x, int m) {
    long long r = x % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

// Polynomials are coefficient vectors over Z_p, constant term first, with no
// trailing-zero normalization requirement except where noted.

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_pos(out[i + j] + static_cast<long long>(a[i]) * b[j], p);
    return poly_trim(std::move(out));
}

// Remainder of a divided by monic divisor m.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    a = poly_trim(std::move(a));
    const int dm = static_cast<int>(m.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int da = static_cast<int>(a.size()) - 1;
        const int c = a[da]; // leading coefficient of m is 1
        for (int i = 0; i <= dm; ++i)
            a[da - dm + i] = mod_pos(a[da - dm + i] - static_cast<long long>(c) * m[i], p);
        a = poly_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

bool poly_is_zero(const std::vector<int>& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

std::vector<int> parse_ints(const std::string& text, char sep) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        if (item.empty()) throw ValidationError("empty numeric field in '" + text + "'");
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("not a number: '" + item + "'");
        }
        if (used != item.size()) throw ValidationError("not a number: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

} // namespace

bool GroupElement::is_zero() const {
    for (int c : d)
        if (c != 0) return false;
    return true;
}

Endomorphism Endomorphism::multiplier(int value) {
    Endomorphism e;
    e.dim = 1;
    e.entries = {value};
    return e;
}

Endomorphism Endomorphism::matrix(int n, std::vector<int> row_major) {
    if (n < 1 || row_major.size() != static_cast<std::size_t>(n) * n)
        throw ValidationError("endomorphism matrix must be n x n");
    Endomorphism e;
    e.dim = n;
    e.entries = std::move(row_major);
    return e;
}

Endomorphism Endomorphism::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    return matrix(n, std::move(m));
}

Endomorphism Endomorphism::zero(int n) {
    return matrix(n, std::vector<int>(static_cast<std::size_t>(n) * n, 0));
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

bool is_irreducible(const std::vector<int>& f, int p) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0 || f[n] != 1) throw ValidationError("irreducibility scan expects a monic polynomial");
    if (n == 1) return true;
    // Trial division by every monic polynomial of degree 1..n-1.
    for (int d = 1; d < n; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long code = 0; code < count; ++code) {
            std::vector<int> g(d + 1, 0);
            long long c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = static_cast<int>(c % p);
                c /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_mod(f, g, p))) return false;
        }
    }
    return true;
}

GroupSpec GroupSpec::cyclic(int k) {
    if (k < 2) throw ValidationError("cyclic modulus must be at least 2, got " + std::to_string(k));
    GroupSpec s;
    s.kind_ = GroupKind::Cyclic;
    s.k_ = k;
    s.order_ = k;
    return s;
}

GroupSpec GroupSpec::field(int p, int n) {
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " not prime");
    if (n < 1) throw ValidationError("field degree must be at least 1");
    // Lexicographically smallest monic irreducible, constant term compared
    // first (so the constant term is the most significant position).
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
        // f[0] is the most significant lexicographic position
        std::vector<int> f(n + 1, 0);
        long long c = code;
        for (int i = n - 1; i >= 0; --i) {
            f[i] = static_cast<int>(c % p);
            c /= p;
        }
        f[n] = 1;
        if (is_irreducible(f, p)) return field(p, n, f);
    }
    throw ValidationError("no irreducible polynomial found"); // unreachable
}

GroupSpec GroupSpec::field(int p, int n, std::vector<int> modulus) {
    if (!is_prime(p)) throw ValidationError(std::to_string(p) + " not prime");
    if (n < 1) throw ValidationError("field degree must be at least 1");
    if (modulus.size() != static_cast<std::size_t>(n) + 1)
        throw ValidationError("modulus must have degree n with n+1 coefficients");
    for (int c : modulus)
        if (c < 0 || c >= p) throw ValidationError("modulus coefficient out of range");
    if (modulus[n] != 1) throw ValidationError("modulus must be monic");
    if (!is_irreducible(modulus, p))
        throw ValidationError("supplied modulus is reducible over Z_" + std::to_string(p));
    GroupSpec s;
    s.kind_ = GroupKind::Field;
    s.p_ = p;
    s.n_ = n;
    s.mod_ = std::move(modulus);
    long long order = 1;
    for (int i = 0; i < n; ++i) order *= p;
    if (order > (1 << 30)) throw ValidationError("field order too large");
    s.order_ = static_cast<int>(order);
    return s;
}

GroupSpec GroupSpec::parse(const std::string& descriptor) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(descriptor);
    while (std::getline(in, item, ':')) parts.push_back(item);
    if (parts.empty()) throw ValidationError("empty group descriptor");
    if (parts[0] == "z") {
        if (parts.size() != 2) throw ValidationError("cyclic descriptor is z:<k>");
        auto v = parse_ints(parts[1], ',');
        if (v.size() != 1) throw ValidationError("cyclic descriptor is z:<k>");
        return cyclic(v[0]);
    }
    if (parts[0] == "gf") {
        if (parts.size() != 3 && parts.size() != 4)
            throw ValidationError("field descriptor is gf:<p>:<n>[:<c0,...,cn>]");
        auto pv = parse_ints(parts[1], ',');
        auto nv = parse_ints(parts[2], ',');
        if (pv.size() != 1 || nv.size() != 1)
            throw ValidationError("field descriptor is gf:<p>:<n>[:<c0,...,cn>]");
        if (parts.size() == 3) return field(pv[0], nv[0]);
        return field(pv[0], nv[0], parse_ints(parts[3], ','));
    }
    throw ValidationError("unknown group kind '" + parts[0] + "'");
}

const std::vector<int>& GroupSpec::modulus() const {
    if (!is_field()) throw ValidationError("cyclic groups have no field modulus");
    return mod_;
}

void GroupSpec::check(const GroupElement& a) const {
    const std::size_t want = is_field() ? static_cast<std::size_t>(n_) : 1;
    if (a.d.size() != want) throw ValidationError("element has wrong digit count for this group");
    const int base = is_field() ? p_ : k_;
    for (int c : a.d)
        if (c < 0 || c >= base) throw ValidationError("element digit out of range");
}

GroupElement GroupSpec::zero() const {
    return GroupElement{std::vector<int>(is_field() ? n_ : 1, 0)};
}

GroupElement GroupSpec::one() const {
    if (!is_field()) throw ValidationError("cyclic groups have no multiplicative identity element here");
    auto e = zero();
    e.d[0] = 1;
    return e;
}

GroupElement GroupSpec::element(std::vector<int> digits) const {
    GroupElement e{std::move(digits)};
    check(e);
    return e;
}

GroupElement GroupSpec::add(const GroupElement& a, const GroupElement& b) const {
    check(a);
    check(b);
    const int base = is_field() ? p_ : k_;
    GroupElement out = a;
    for (std::size_t i = 0; i < out.d.size(); ++i) out.d[i] = mod_pos(out.d[i] + b.d[i], base);
    return out;
}

GroupElement GroupSpec::neg(const GroupElement& a) const {
    check(a);
    const int base = is_field() ? p_ : k_;
    GroupElement out = a;
    for (auto& c : out.d) c = mod_pos(-c, base);
    return out;
}

GroupElement GroupSpec::sub(const GroupElement& a, const GroupElement& b) const {
    return add(a, neg(b));
}

GroupElement GroupSpec::mul(const GroupElement& a, const GroupElement& b) const {
    if (!is_field()) throw ValidationError("mul is defined for field groups only");
    check(a);
    check(b);
    auto prod = poly_mod(poly_mul(a.d, b.d, p_), mod_, p_);
    prod.resize(n_, 0);
    return GroupElement{std::move(prod)};
}

GroupElement GroupSpec::inv(const GroupElement& a) const {
    if (!is_field()) throw ValidationError("inv is defined for field groups only");
    check(a);
    if (a.is_zero()) throw ValidationError("inversion of zero");
    return pow(a, order_ - 2);
}

GroupElement GroupSpec::pow(const GroupElement& a, long long e) const {
    if (!is_field()) throw ValidationError("pow is defined for field groups only");
    check(a);
    if (e < 0) return pow(inv(a), -e);
    GroupElement result = one();
    GroupElement base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

GroupElement GroupSpec::primitive_element() const {
    if (!is_field()) throw ValidationError("cyclic groups have no canonical generator; use multipliers");
    const int target = order_ - 1;
    for (int idx = 1; idx < order_; ++idx) {
        GroupElement cand = element_at(idx);
        GroupElement acc = cand;
        int ord = 1;
        while (!(acc == one())) {
            acc = mul(acc, cand);
            ++ord;
        }
        if (ord == target) return cand;
    }
    throw ValidationError("no generator found"); // unreachable for a field
}

GroupElement GroupSpec::apply(const Endomorphism& sigma, const GroupElement& a) const {
    check(a);
    if (!is_field()) {
        if (sigma.dim != 1 || sigma.entries.size() != 1)
            throw ValidationError("cyclic endomorphism must be a single multiplier");
        return GroupElement{{mod_pos(static_cast<long long>(sigma.entries[0]) * a.d[0], k_)}};
    }
    if (sigma.dim != n_) throw ValidationError("endomorphism shape mismatch");
    GroupElement out = zero();
    for (int i = 0; i < n_; ++i) {
        long long acc = 0;
        for (int j = 0; j < n_; ++j)
            acc += static_cast<long long>(sigma.entries[static_cast<std::size_t>(i) * n_ + j]) * a.d[j];
        out.d[i] = mod_pos(acc, p_);
    }
    return out;
}

int GroupSpec::index_of(const GroupElement& a) const {
    check(a);
    if (!is_field()) return a.d[0];
    int idx = 0;
    for (int i = 0; i < n_; ++i) idx = idx * p_ + a.d[i];
    return idx;
}

GroupElement GroupSpec::element_at(int index) const {
    if (index < 0 || index >= order_) throw ValidationError("element index out of range");
    if (!is_field()) return GroupElement{{index}};
    GroupElement out = zero();
    for (int i = n_ - 1; i >= 0; --i) {
        out.d[i] = index % p_;
        index /= p_;
    }
    return out;
}

int GroupSpec::discrete_log(const GroupElement& b, const GroupElement& a) const {
    if (!is_field()) throw ValidationError("discrete logs are defined for field groups only");
    check(a);
    if (a.is_zero()) return -1;
    GroupElement acc = one();
    for (int j = 0; j < order_ - 1; ++j) {
        if (acc == a) return j;
        acc = mul(acc, b);
    }
    throw ValidationError("discrete log base is not a generator");
}

std::string GroupSpec::descriptor() const {
    std::ostringstream out;
    if (!is_field()) {
        out << "z:" << k_;
        return out.str();
    }
    out << "gf:" << p_ << ":" << n_ << ":";
    for (std::size_t i = 0; i < mod_.size(); ++i) {
        if (i) out << ",";
        out << mod_[i];
    }
    return out.str();
}

std::string GroupSpec::format(const GroupElement& a) const {
    check(a);
    std::ostringstream out;
    for (std::size_t i = 0; i < a.d.size(); ++i) {
        if (i) out << ",";
        out << a.d[i];
    }
    return out.str();
}

GroupElement GroupSpec::parse_element(const std::string& text) const {
    return element(parse_ints(text, ','));
}

} // namespace nzflow
