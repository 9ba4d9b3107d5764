#pragma once

#include <array>
#include <cstdint>

namespace qgrass {

// Arithmetic tables for GF(q), q in {2, 3, 4, 5, 7, 8, 9}.  Elements are
// integer indices 0..q-1; for extension fields the index encodes the
// polynomial coefficient vector in base p (so 0 and 1 are the additive and
// multiplicative identities in every field).  All tables are verified
// against the field axioms at construction.
class FieldSpec {
public:
    static constexpr int kMaxOrder = 9;

    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return deg_; }

    uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
    uint8_t neg(uint8_t a) const { return neg_[a]; }
    // inverse of a nonzero element
    uint8_t inv(uint8_t a) const { return inv_[a]; }

private:
    friend const FieldSpec& make_field(int q);
    explicit FieldSpec(int q);
    void verify_axioms() const;

    int q_, p_, deg_;
    std::array<std::array<uint8_t, kMaxOrder>, kMaxOrder> add_{};
    std::array<std::array<uint8_t, kMaxOrder>, kMaxOrder> mul_{};
    std::array<uint8_t, kMaxOrder> neg_{};
    std::array<uint8_t, kMaxOrder> inv_{};
};

// Returns the cached table set for GF(q); throws std::invalid_argument for
// any q outside the supported list.
const FieldSpec& make_field(int q);

}  // namespace qgrass
