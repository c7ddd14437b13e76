#pragma once

#include "msv/multistage.hpp"

#include <string>
#include <vector>

namespace msv {

// Nondecreasing omega with omega(0) = 0.
struct OmegaFunction {
    std::string name;
    std::function<Rational(int)> eval;
};

OmegaFunction omega_av();      // x
OmegaFunction omega_pav();     // harmonic partial sums
OmegaFunction omega_acc();     // min(1, x)
OmegaFunction omega_convex();  // 0, 1, 3, 5, 7, ... (increments 1 then 2)

// Explicit values omega(0..max); arguments beyond the table are an error.
OmegaFunction omega_table(std::vector<Rational> values, std::string name = "table");
// Table file: { "values": ["0", "1", "3"] }
OmegaFunction load_omega_table(const std::string& path);

Rational thiele_score(const OmegaFunction& omega, const Election& e, const Committee& S);

WinnerSet thiele_winners(const OmegaFunction& omega, const Election& e,
                         const Committee& pool, int k, const EnumOptions& opt = {});
WinnerSet thiele_winners(const OmegaFunction& omega, const Election& e, int k,
                         const EnumOptions& opt = {});

// Multi-stage composition with the same omega and the original approval
// ballots at every stage; pool shrinkage is handled by intersection.
MultiStageResult run_multistage_thiele(const OmegaFunction& omega, const Election& e,
                                       const StageVector& v,
                                       const MultiStageOptions& opt = {});

// True iff all first differences omega(i) - omega(i-1) over [1, upto] agree.
bool is_linear_omega(const OmegaFunction& omega, int upto);

}  // namespace msv
