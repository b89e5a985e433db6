#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "springer/jinduction.hpp"
#include "springer/springer_map.hpp"

namespace springer {

// One parahoric subgroup from the explicit per-family lists:
//   A: S_{n/d} x ... x S_{n/d} (d blocks)
//   B: W_r x S_p x W_q
//   C: W_r x W'_q
//   D: W'_r x S_p^(lambda) x W'_q
struct ParahoricSpec {
    ClassFamily family = ClassFamily::A;
    int r = 0, p = 0, q = 0, lambda = 0;
    int d = 1;
    bool maximal = false;

    std::string describe() const;
    friend bool operator==(const ParahoricSpec&, const ParahoricSpec&) = default;
};

struct OmegaDescriptor {
    ClassFamily family = ClassFamily::A;
    int n = 0;
    int order = 1;
    bool cyclic = true;
    std::vector<std::string> subgroups;
    std::vector<int> subgroup_orders;
};

OmegaDescriptor omega(ClassFamily f, int n);
int rank_floor(ClassFamily f);

struct Witness {
    ParahoricSpec J;
    std::vector<IrrLabel> factors;  // A: the repeated block factor only
    int f = 1;
    int order = 1;     // order of the stabilizing subgroup this witness realizes
    std::string rule;  // which characterization produced it
};

// Pushes the witness factors through j; degenerate type D outputs carry the
// kappa convention.
JResult replay(const Witness& w);

// Label with kappa cleared for degenerate type D symbols.
IrrLabel symbol_key(const IrrLabel& l);

struct RepSideOptions {
    bool parallel = true;
    int m_extra = 0;  // added to every default m (shift-stability checks)
};

// The representation side for one group, computed only from j over the
// parahoric families and from f of special factors.
struct RepSide {
    ClassFamily family = ClassFamily::A;
    int n = 0;
    std::set<IrrLabel> bar_s;               // j-image of maximal parahorics
    std::map<IrrLabel, Witness> fa_best;    // symbol key -> maximizing witness
    std::map<IrrLabel, Witness> fc_best;    // symbol key -> largest stable witness
    std::vector<Witness> maximal_witnesses;
    std::vector<IrrLabel> maximal_outputs;  // parallel to maximal_witnesses
    std::vector<Witness> stable_witnesses;
    std::vector<IrrLabel> stable_outputs;

    int fa(const IrrLabel& e) const;
    int fc(const IrrLabel& e) const;
};

RepSide build_rep_side(ClassFamily f, int n, const RepSideOptions& opt = {});

// All (J, E1) from the explicit families with j(E1) = E.
std::vector<Witness> enumerate_cz(const IrrLabel& e, ClassFamily f, int n, bool maximal_only);
// Same for maximal parahorics, found from sum decompositions of the class sequence.
std::vector<Witness> enumerate_cz_sequences(const IrrLabel& e, ClassFamily f, int n);

int fa(const IrrLabel& e, ClassFamily f, int n);
Witness fc(const IrrLabel& e, ClassFamily f, int n);
std::set<IrrLabel> bar_s(ClassFamily f, int n);

struct VerifyRecord {
    IrrLabel e;
    ClassLabel cls;
    int b_e = 0, bbar = 0;
    int fa = 0, z = 0;
    int fc = 0, ztilde_over_z = 0;
    int uz_over_z = 0;
    Witness fa_witness, fc_witness;
    bool b1 = false, b2 = false, b3 = false;
    bool replay_ok = false;
    bool fa_le_z = false;
    bool fc_divides_omega = false;
    bool ok() const { return b1 && b2 && b3 && replay_ok && fa_le_z && fc_divides_omega; }
};

struct VerificationReport {
    ClassFamily family = ClassFamily::A;
    int n = 0;
    int m = 0;
    std::vector<IrrLabel> missing_from_bar_s;  // in the class-side set only
    std::vector<IrrLabel> extra_in_bar_s;      // in the j-image only
    std::vector<VerifyRecord> records;
    bool a_ok = false, b1_ok = false, b2_ok = false, b3_ok = false, replay_ok = false;
    bool kappa_convention_used = false;
    bool ok() const { return a_ok && b1_ok && b2_ok && b3_ok && replay_ok; }
};

VerificationReport verify(ClassFamily f, int n, const RepSideOptions& opt = {});
// Serial twin kept as the reference for the parallel path.
VerificationReport verify_serial(ClassFamily f, int n, int m_extra = 0);

}  // namespace springer
