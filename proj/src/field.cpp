#include "qpc/field.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qpc/error.hpp"

namespace qpc {
namespace {

// q = p^r with p prime, or 0 if q is not a prime power.
unsigned char_of(unsigned q, unsigned& r_out) {
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        unsigned m = q, r = 0;
        while (m % p == 0) {
            m /= p;
            ++r;
        }
        if (m != 1) return 0;  // a second prime factor remains
        r_out = r;
        return p;
    }
    return 0;
}

using Poly = std::vector<uint8_t>;  // low-degree-first coefficients over GF(p)

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
    // m monic; reduce a in place
    while (a.size() >= m.size()) {
        uint8_t lead = a.back();
        if (lead != 0) {
            size_t shift = a.size() - m.size();
            for (size_t i = 0; i < m.size(); ++i) {
                unsigned t = a[shift + i] + p - (lead * m[i]) % p;
                a[shift + i] = uint8_t(t % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, unsigned p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = uint8_t((prod[i + j] + a[i] * b[j]) % p);
    return poly_mod(std::move(prod), m, p);
}

bool divides(const Poly& d, const Poly& f, unsigned p) {
    return poly_mod(f, d, p).empty();
}

// Irreducibility by trial division against every monic polynomial of
// degree 1..deg(f)/2 (fields here are tiny; brute force is fine).
bool irreducible(const Poly& f, unsigned p) {
    unsigned deg = unsigned(f.size()) - 1;
    for (unsigned d = 1; d * 2 <= deg; ++d) {
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            unsigned c = code;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = uint8_t(c % p);
                c /= p;
            }
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(unsigned p, unsigned r) {
    unsigned count = 1;
    for (unsigned i = 0; i < r; ++i) count *= p;
    for (unsigned code = 0; code < count; ++code) {
        Poly f(r + 1, 0);
        unsigned c = code;
        for (unsigned i = 0; i < r; ++i) {
            f[i] = uint8_t(c % p);
            c /= p;
        }
        f[r] = 1;
        if (irreducible(f, p)) return f;
    }
    throw Error("Internal", "no irreducible polynomial found");
}

unsigned encode(const Poly& a, unsigned p) {
    unsigned v = 0, w = 1;
    for (uint8_t c : a) {
        v += c * w;
        w *= p;
    }
    return v;
}

Poly decode(unsigned v, unsigned p) {
    Poly a;
    while (v) {
        a.push_back(uint8_t(v % p));
        v /= p;
    }
    return a;
}

}  // namespace

Field::Field(unsigned q) : q_(q) {
    if (q < 2 || q > 256) throw Error("NotPrimePower", "q out of range [2, 256]");
    p_ = char_of(q, r_);
    if (p_ == 0) throw Error("NotPrimePower", "q = " + std::to_string(q) + " is not a prime power");

    if (r_ > 1) modulus_ = smallest_irreducible(p_, r_);

    // addition: digit-wise mod p on the radix-p encodings
    add_.assign(size_t(q_) * q_, 0);
    neg_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a) {
        for (unsigned b = 0; b < q_; ++b) {
            unsigned x = a, y = b, s = 0, w = 1;
            for (unsigned i = 0; i < r_; ++i) {
                s += ((x % p_) + (y % p_)) % p_ * w;
                x /= p_;
                y /= p_;
                w *= p_;
            }
            add_[idx(uint8_t(a), uint8_t(b))] = uint8_t(s);
        }
        unsigned x = a, s = 0, w = 1;
        for (unsigned i = 0; i < r_; ++i) {
            s += (p_ - x % p_) % p_ * w;
            x /= p_;
            w *= p_;
        }
        neg_[a] = uint8_t(s);
    }

    // exp/log from the smallest primitive element
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    for (unsigned g = 1; g < q_; ++g) {
        Poly gp = decode(g, p_);
        Poly acc{1};
        bool primitive = true;
        std::vector<uint8_t> exps(q_ - 1, 0);
        for (unsigned i = 0; i < q_ - 1; ++i) {
            unsigned e = encode(acc, p_);
            exps[i] = uint8_t(e);
            if (e == 1 && i > 0) {
                primitive = false;
                break;
            }
            if (r_ == 1)
                acc = decode(encode(acc, p_) * g % p_, p_);
            else
                acc = poly_mulmod(acc, gp, modulus_, p_);
        }
        if (primitive && encode(acc, p_) == 1) {
            exp_ = exps;
            for (unsigned i = 0; i < q_ - 1; ++i) log_[exp_[i]] = uint8_t(i);
            return;
        }
    }
    throw Error("Internal", "no primitive element found");
}

uint8_t Field::inv(uint8_t a) const {
    if (a == 0) throw Error("DivisionByZero", "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

const Field& Field::get(unsigned q) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::make_unique<Field>(q)).first;
    return *it->second;
}

}  // namespace qpc
