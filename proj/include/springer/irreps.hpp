#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/seqcomb.hpp"

namespace springer {

enum class Family { A, BC, D };

const char* family_name(Family f);
Family parse_family(const std::string& s);

using Partition = std::vector<int>;  // weakly decreasing, positive parts

// Symbol naming an irreducible representation.
//   A : one row z.
//   BC: rows z (length k+1) and zp (length k); z carries the first partition.
//   D : rows of equal length; oriented so (rho0(z), z) >= (rho0(zp), zp).
// kappa is meaningful only for degenerate D labels (z == zp, n >= 2).
struct IrrLabel {
    Family family = Family::A;
    int n = 0;
    Seq z;
    Seq zp;
    int kappa = 0;

    friend bool operator==(const IrrLabel&, const IrrLabel&) = default;
    friend auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

struct SpecialRep {
    IrrLabel label;
    Seq x;  // image under the family's interleaving map
    int b = 0;
    int f = 1;
};

// Partition <-> strictly increasing row.
Partition partition_of(const Seq& z);
Seq row_of(const Partition& p, int length);
std::vector<Partition> partitions(int n);
int partition_size(const Partition& p);

// Constructors validate and return the canonical (shortest) representative.
IrrLabel label_a(const Seq& z);
IrrLabel label_bc(const Seq& z, const Seq& zp);
IrrLabel label_d(const Seq& z, const Seq& zp, int kappa = 0);
IrrLabel label_from_partition(const Partition& p);
IrrLabel label_from_bipartition(Family f, const Partition& top, const Partition& bottom, int kappa = 0);

IrrLabel canonicalize(const IrrLabel& l);
IrrLabel shift(const IrrLabel& l, int t);
void validate(const IrrLabel& l);

bool is_degenerate(const IrrLabel& l);
// D labels with rho0(z) > rho0(zp) or z == zp; every A/BC label qualifies.
bool is_dagger(const IrrLabel& l);

// Rows re-expressed with k+1 (A, and the BC top row) or k entries.
Seq row_at(const Seq& z, int length);
Seq top_at(const IrrLabel& l, int k);
Seq bottom_at(const IrrLabel& l, int k);
// Smallest k for which top_at/bottom_at are defined.
int min_k(const IrrLabel& l);

int b_invariant(const IrrLabel& l);
std::int64_t dimension(const IrrLabel& l);

// Interleaving maps. The returned sequence may fail to be an X-sequence, in
// which case the label is not special.
Seq interleave_bc(const IrrLabel& l, int m);        // m even
Seq interleave_d_prime(const IrrLabel& l, int m);   // m odd
Seq interleave_d_tilde(const IrrLabel& l, int m);   // m even

IrrLabel zeta_inverse_bc(const Seq& x);
std::vector<IrrLabel> zeta_inverse_d_prime(const Seq& x);
std::vector<IrrLabel> zeta_inverse_d_tilde(const Seq& x);

// zeta / zeta' image of a special label at the given m (throws if not special).
Seq zeta(const IrrLabel& l, int m);

bool is_special(const IrrLabel& l);
// f for a special label; A is identically 1.
int f_invariant(const IrrLabel& l);
int f_bc(const Seq& x);
int f_d_prime(const Seq& x);
int f_d_tilde(const Seq& x);

int default_m(Family f, int n);
int default_m_tilde(int n);

enum class DParam { Prime, Tilde };
std::vector<SpecialRep> special_reps(Family f, int n, int m = -1, DParam param = DParam::Prime);

// All irreducibles; for D unordered pairs with degenerate pairs doubled.
std::vector<IrrLabel> all_irreps(Family f, int n);

// Irr(S_p) <-> nondecreasing sequences summing to p.
Seq xi(const IrrLabel& l, int m);
IrrLabel xi_inverse(const Seq& e);

std::string to_string(const IrrLabel& l);

}  // namespace springer
