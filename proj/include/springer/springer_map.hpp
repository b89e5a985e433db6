#pragma once

#include <string>
#include <vector>

#include "springer/irreps.hpp"

namespace springer {

enum class ClassFamily { A, B, C, D };

const char* class_family_name(ClassFamily f);
ClassFamily parse_class_family(const std::string& s);
// Label family used for the Weyl group of a class family (B and C share W_n).
Family label_family(ClassFamily f);

// A unipotent class, named by the sequence attached to it:
//   A: z in Z_m^n; B: y in Y_m^n (m even); C: y in YT_m^n (m even); D: y in Y_m^n (m odd).
struct ClassLabel {
    ClassFamily family = ClassFamily::A;
    int n = 0;
    Seq y;
    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
};

struct ClassInvariants {
    int bbar = 0;
    int z = 1;
    int ztilde_over_z = 1;
    int uz_over_z = 0;  // type D only (0 elsewhere)
};

int class_default_m(ClassFamily f, int n);
void validate(const ClassLabel& c);

std::vector<ClassLabel> enumerate_classes(ClassFamily f, int n, int m = -1);

// Labels attached to a class: one, or two (kappa = 0, 1) in type D when frak_i is empty.
std::vector<IrrLabel> tau_fiber(const ClassLabel& c);
// Class attached to a label at the given m (inverse of tau_fiber).
ClassLabel tau(ClassFamily f, const IrrLabel& e, int m = -1);

ClassInvariants class_invariants(const ClassLabel& c);

// Deviation from the base sequence with leading zeros removed; equal for the
// same class at every admissible m.
Seq renormalized(const ClassLabel& c);

std::string to_string(const ClassLabel& c);

}  // namespace springer
