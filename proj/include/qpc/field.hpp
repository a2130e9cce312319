#ifndef QPC_FIELD_HPP
#define QPC_FIELD_HPP

#include <cstdint>
#include <vector>

namespace qpc {

// Arithmetic context for GF(q), q = p^r, p prime, 2 <= q <= 256.
//
// Elements are integers in [0, q).  For r > 1 the integer is the radix-p
// encoding of the polynomial representative (coefficient of x^i carries
// weight p^i) modulo a fixed irreducible polynomial: the lexicographically
// smallest monic irreducible of degree r over GF(p).  Multiplication and
// inversion go through exp/log tables built from a fixed primitive element.
//
// Field objects are immutable after construction; all operations are pure.
class Field {
  public:
    explicit Field(unsigned q);

    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned r() const { return r_; }
    bool prime() const { return r_ == 1; }

    // Low-degree-first coefficients of the modulus, monic part included
    // (length r + 1).  Empty when r == 1.
    const std::vector<uint8_t>& modulus() const { return modulus_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[idx(a, b)]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[idx(a, neg_[b])]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    uint8_t mul(uint8_t a, uint8_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    uint8_t inv(uint8_t a) const;  // throws DivisionByZero for a == 0
    uint8_t div(uint8_t a, uint8_t b) const { return mul(a, inv(b)); }

    const std::vector<uint8_t>& exp_table() const { return exp_; }
    const std::vector<uint8_t>& log_table() const { return log_; }

    // Shared immutable instance per q; thread-safe.
    static const Field& get(unsigned q);

  private:
    size_t idx(uint8_t a, uint8_t b) const { return size_t(a) * q_ + b; }

    unsigned q_, p_, r_;
    std::vector<uint8_t> modulus_;
    std::vector<uint8_t> add_;   // q*q flat table
    std::vector<uint8_t> neg_;   // q entries
    std::vector<uint8_t> exp_;   // q-1 entries, exp_[i] = g^i
    std::vector<uint8_t> log_;   // q entries, log_[0] unused
};

}  // namespace qpc

#endif
