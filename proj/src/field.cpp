#include "qgrass/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qgrass {

namespace {

struct FieldShape {
    int p;
    int deg;
    // modulus coefficients, little-endian, degree `deg`, leading 1 implied
    std::array<int, 3> mod;
};

// Fixed irreducible polynomials for the extension fields:
//   GF(4): x^2 + x + 1,  GF(8): x^3 + x + 1,  GF(9): x^2 + 1.
FieldShape shape_for(int q) {
    switch (q) {
        case 2: return {2, 1, {0, 0, 0}};
        case 3: return {3, 1, {0, 0, 0}};
        case 4: return {2, 2, {1, 1, 0}};
        case 5: return {5, 1, {0, 0, 0}};
        case 7: return {7, 1, {0, 0, 0}};
        case 8: return {2, 3, {1, 1, 0}};
        case 9: return {3, 2, {1, 0, 0}};
        default:
            throw std::invalid_argument("make_field: unsupported field order " + std::to_string(q) +
                                        " (supported: 2, 3, 4, 5, 7, 8, 9)");
    }
}

std::vector<int> digits_of(int e, int p, int deg) {
    std::vector<int> d(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        d[static_cast<size_t>(i)] = e % p;
        e /= p;
    }
    return d;
}

int index_of(const std::vector<int>& d, int p) {
    int e = 0;
    for (size_t i = d.size(); i-- > 0;) e = e * p + d[i];
    return e;
}

}  // namespace

FieldSpec::FieldSpec(int q) : q_(q) {
    FieldShape sh = shape_for(q);
    p_ = sh.p;
    deg_ = sh.deg;

    for (int a = 0; a < q_; ++a) {
        auto da = digits_of(a, p_, deg_);
        for (int b = 0; b < q_; ++b) {
            auto db = digits_of(b, p_, deg_);

            std::vector<int> sum(static_cast<size_t>(deg_));
            for (int i = 0; i < deg_; ++i)
                sum[static_cast<size_t>(i)] = (da[static_cast<size_t>(i)] + db[static_cast<size_t>(i)]) % p_;
            add_[a][b] = static_cast<uint8_t>(index_of(sum, p_));

            // polynomial product reduced modulo the fixed irreducible
            std::vector<int> prod(static_cast<size_t>(2 * deg_ - 1), 0);
            for (int i = 0; i < deg_; ++i)
                for (int j = 0; j < deg_; ++j)
                    prod[static_cast<size_t>(i + j)] =
                        (prod[static_cast<size_t>(i + j)] +
                         da[static_cast<size_t>(i)] * db[static_cast<size_t>(j)]) % p_;
            for (int d = 2 * deg_ - 2; d >= deg_; --d) {
                int coef = prod[static_cast<size_t>(d)];
                if (coef == 0) continue;
                prod[static_cast<size_t>(d)] = 0;
                // x^deg = -mod, applied at shift d-deg
                for (int i = 0; i < deg_; ++i) {
                    int& slot = prod[static_cast<size_t>(d - deg_ + i)];
                    slot = ((slot - coef * sh.mod[static_cast<size_t>(i)]) % p_ + p_) % p_;
                }
            }
            prod.resize(static_cast<size_t>(deg_));
            mul_[a][b] = static_cast<uint8_t>(index_of(prod, p_));
        }
    }

    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add_[a][b] == 0) neg_[a] = static_cast<uint8_t>(b);
            if (a != 0 && mul_[a][b] == 1) inv_[a] = static_cast<uint8_t>(b);
        }
    }
    inv_[0] = 0;

    verify_axioms();
}

void FieldSpec::verify_axioms() const {
    auto fail = [&](const char* what) {
        throw std::logic_error(std::string("FieldSpec: axiom check failed: ") + what);
    };
    int q = q_;
    for (int a = 0; a < q; ++a) {
        if (add_[a][0] != a) fail("additive identity");
        if (mul_[a][1] != a) fail("multiplicative identity");
        if (mul_[a][0] != 0) fail("absorbing zero");
        if (add_[a][neg_[a]] != 0) fail("additive inverse");
        if (a != 0 && mul_[a][inv_[a]] != 1) fail("multiplicative inverse");
        for (int b = 0; b < q; ++b) {
            if (add_[a][b] != add_[b][a]) fail("addition commutativity");
            if (mul_[a][b] != mul_[b][a]) fail("multiplication commutativity");
            for (int c = 0; c < q; ++c) {
                if (add_[add_[a][b]][c] != add_[a][add_[b][c]]) fail("addition associativity");
                if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) fail("multiplication associativity");
                if (mul_[a][add_[b][c]] != add_[mul_[a][b]][mul_[a][c]]) fail("distributivity");
            }
        }
    }
}

const FieldSpec& make_field(int q) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<FieldSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) {
        it = cache.emplace(q, std::unique_ptr<FieldSpec>(new FieldSpec(q))).first;
    }
    return *it->second;
}

}  // namespace qgrass
