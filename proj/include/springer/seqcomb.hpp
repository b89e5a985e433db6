#pragma once

#include <string>
#include <utility>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

// A sequence (s_0, ..., s_m); the shape is implied by context and checked
// by the is_* predicates below.
using Seq = std::vector<int>;
using SeqPair = std::pair<Seq, Seq>;

inline constexpr int kMaxLength = 64;  // caps on m and on the stratum statistic

enum class Kind { Z, X, Y, XT, YT, E };

const char* kind_name(Kind k);

// Shape predicates. XT/YT additionally require m even and m >= 2.
bool is_z(const Seq& s);
bool is_x(const Seq& s);
bool is_y(const Seq& s);
bool is_e(const Seq& s);
bool is_xt(const Seq& s);
bool is_yt(const Seq& s);
bool is_kind(Kind k, const Seq& s);
void require_kind(Kind k, const Seq& s, const char* op);

// Base sequences, i.e. the pointwise minima of each space.
Seq z_base(int m);   // (0,1,...,m)
Seq x_base(int m);   // (0,0,1,1,...)
Seq y_base(int m);   // (0,0,2,2,...)
Seq xt_base(int m);  // (0,1,1,2,2,...)
Seq yt_base(int m);  // (0,1,2,...,m)
Seq base_of(Kind k, int m);

Seq add(const Seq& a, const Seq& b);
Seq sub(const Seq& a, const Seq& b);

// Deviation sum against base, and the same with deviation i weighted by m-i.
int deviation_sum(const Seq& s, const Seq& base);
int weighted_deviation_sum(const Seq& s, const Seq& base);

int rho0(const Seq& z);
int beta0(const Seq& z);
int rho(const Seq& x);
int beta(const Seq& x);
int rho_prime(const Seq& y);
int beta_prime(const Seq& y);
int tilde_rho(const Seq& x);
int tilde_beta(const Seq& x);
int tilde_rho_prime(const Seq& y);
int tilde_beta_prime(const Seq& y);

// Strict points of an X-sequence: x_{i-1} < x_i < x_{i+1} with open ends.
std::vector<int> frak_s(const Seq& x);

struct Interval {
    int lo = 0;
    int hi = 0;
    int size() const { return hi - lo + 1; }
    bool contains(int i) const { return lo <= i && i <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Maximal runs of constant y_i - i entered and left by strict increases.
std::vector<Interval> frak_i(const Seq& y);
std::vector<Interval> frak_i_odd(const Seq& y);
std::vector<Interval> frak_i_even(const Seq& y);
std::vector<int> r_set(const Seq& y);   // all interval endpoints
std::vector<int> r0_set(const Seq& y);  // singleton intervals

enum class BlockKind { SinglePair, Arithmetic };

struct Block {
    Interval span;
    BlockKind kind = BlockKind::Arithmetic;
    int base = 0;  // y at the first index of the block
};

struct IntervalDecomp {
    std::vector<Block> blocks;
};

// Unique split of [0,m] into equal pairs (a,a) and runs (a,a+1,...),
// consecutive blocks separated by a jump of at least 2.
IntervalDecomp interval_decomp(const Seq& y);

bool member_s(const Seq& y, const Seq& x, const Seq& xp);
std::vector<SeqPair> enumerate_s(const Seq& y);
SeqPair construct_one_s(const Seq& y);

bool member_tilde_s(const Seq& y, const Seq& x, const Seq& xp);
std::vector<SeqPair> enumerate_tilde_s(const Seq& y);

// x = xhat + e where xhat depends only on the strict points of x.
SeqPair hat_decompose(const Seq& x);

// All sequences of the given kind and length m+1 whose statistic is n,
// in lexicographic order.
std::vector<Seq> enumerate_space(Kind k, int m, int n);

// Pairs (x, e) with y = x + e + x, frak_s(e + x) = frak_s(x), (x, e + x) in S(y).
std::vector<SeqPair> symmetric_decompositions(const Seq& y);

// All (x, x') with x + x' = y, x in X and x' in X (or in XT when tilde).
std::vector<SeqPair> sum_decompositions(const Seq& y, bool tilde);

std::string to_string(const Seq& s);
std::string to_string(const std::vector<Interval>& v);

}  // namespace springer
