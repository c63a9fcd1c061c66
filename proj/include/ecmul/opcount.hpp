// SPDX-License-Identifier: Apache-2.0
//
// Field- and point-operation tallies. Formula implementations report every
// field multiplication, squaring, constant multiplication, addition and
// inversion they perform, so published per-operation budgets become testable
// assertions.

#pragma once

#include <array>
#include <cstdint>

namespace ecmul {

/// One bank of operation tallies.
struct OpTally {
    std::uint64_t field_mul = 0;
    std::uint64_t field_sqr = 0;
    std::uint64_t field_add_sub = 0;
    std::uint64_t field_inv = 0;
    std::uint64_t const_mul = 0;   ///< multiplications by a curve constant (a, c, d)
    std::uint64_t point_add = 0;
    std::uint64_t point_double = 0;
    std::uint64_t point_triple = 0;

    OpTally& operator+=(const OpTally& o) {
        field_mul += o.field_mul;
        field_sqr += o.field_sqr;
        field_add_sub += o.field_add_sub;
        field_inv += o.field_inv;
        const_mul += o.const_mul;
        point_add += o.point_add;
        point_double += o.point_double;
        point_triple += o.point_triple;
        return *this;
    }
    friend OpTally operator+(OpTally a, const OpTally& b) { return a += b; }
    friend OpTally operator-(const OpTally& a, const OpTally& b) {
        OpTally r;
        r.field_mul = a.field_mul - b.field_mul;
        r.field_sqr = a.field_sqr - b.field_sqr;
        r.field_add_sub = a.field_add_sub - b.field_add_sub;
        r.field_inv = a.field_inv - b.field_inv;
        r.const_mul = a.const_mul - b.const_mul;
        r.point_add = a.point_add - b.point_add;
        r.point_double = a.point_double - b.point_double;
        r.point_triple = a.point_triple - b.point_triple;
        return r;
    }
    bool operator==(const OpTally&) const = default;
};

/// Counting banks. Degenerate-case pre-checks (infinity / equal-point
/// detection) and precomputation-table construction are tallied apart from
/// the main run so main-loop counts can be compared against the analytic
/// cost model directly.
enum class Bank : unsigned { Main = 0, Precheck = 1, Precomp = 2 };

/// Per-run operation counter. Never global; one counter per scalar-mult run.
/// Not safe to share across concurrent runs.
class OpCounter {
public:
    void mul() { bank().field_mul++; }
    void sqr() { bank().field_sqr++; }
    void add_sub() { bank().field_add_sub++; }
    void inv() { bank().field_inv++; }
    void constant_mul() { bank().const_mul++; }
    void padd() { bank().point_add++; }
    void pdouble() { bank().point_double++; }
    void ptriple() { bank().point_triple++; }

    const OpTally& main() const { return banks_[0]; }
    const OpTally& precheck() const { return banks_[1]; }
    const OpTally& precomp() const { return banks_[2]; }
    OpTally total() const { return banks_[0] + banks_[1] + banks_[2]; }

    Bank active() const { return active_; }
    void set_active(Bank b) { active_ = b; }

private:
    OpTally& bank() { return banks_[static_cast<unsigned>(active_)]; }
    std::array<OpTally, 3> banks_{};
    Bank active_ = Bank::Main;
};

/// Scoped bank switch; restores the previous bank on destruction.
/// Counter may be null (counting disabled), in which case this is a no-op.
class BankScope {
public:
    BankScope(OpCounter* c, Bank b) : counter_(c) {
        if (counter_) {
            saved_ = counter_->active();
            counter_->set_active(b);
        }
    }
    ~BankScope() {
        if (counter_) counter_->set_active(saved_);
    }
    BankScope(const BankScope&) = delete;
    BankScope& operator=(const BankScope&) = delete;

private:
    OpCounter* counter_;
    Bank saved_ = Bank::Main;
};

// Null-safe counting helpers used by the field and curve layers.
inline void count_mul(OpCounter* c) { if (c) c->mul(); }
inline void count_sqr(OpCounter* c) { if (c) c->sqr(); }
inline void count_add_sub(OpCounter* c) { if (c) c->add_sub(); }
inline void count_inv(OpCounter* c) { if (c) c->inv(); }
inline void count_const_mul(OpCounter* c) { if (c) c->constant_mul(); }
inline void count_padd(OpCounter* c) { if (c) c->padd(); }
inline void count_pdouble(OpCounter* c) { if (c) c->pdouble(); }
inline void count_ptriple(OpCounter* c) { if (c) c->ptriple(); }

}  // namespace ecmul
