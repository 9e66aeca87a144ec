#pragma once

#include <string>
#include <vector>

#include "laminations/exterior.hpp"
#include "laminations/traintrack.hpp"

namespace laminations {

// Weight-space coordinate models for the standard chart family, built
// inductively: four base surfaces, a genus step appending six coordinates,
// and a puncture step appending two.

enum class BaseModel { S05, S12, S20, S21 };
enum class StepKind { Genus, Puncture };

// Residue condition on integral points: covector . x = 0 (mod modulus).
struct Congruence {
  std::vector<Integer> covector;
  Integer modulus;
};

struct CoordModel {
  BaseModel base = BaseModel::S05;
  int g = 0, n = 0;                  // surface type; dim() = 6g - 6 + 2n
  std::vector<std::string> coords;   // coordinate names, index = position
  TwoForm form;                      // symplectic form over coords
  std::vector<Congruence> congruences;

  // Bookkeeping covectors driving the induction. genus_cov is G_i for the
  // next genus block (empty when the model is not on a genus chain);
  // puncture_cov is c_k for the next puncture pair (empty when puncture
  // steps are unavailable, i.e. on the closed chain).
  std::vector<Integer> genus_cov;
  std::vector<Integer> puncture_cov;

  int dim() const { return static_cast<int>(coords.size()); }
};

// The four base charts:
//   S05: sphere, 5 punctures, coords z1..z4
//   S12: torus, 2 punctures, coords s1..s4
//   S20: closed genus 2, coords x1..x6
//   S21: genus 2 with 1 puncture, coords y1..y8 (carries one mod-2 congruence)
CoordModel base_model(BaseModel which);

// Genus step: appends coordinates A_i..F_i (i = g - 1) wired to the running
// genus covector G_i, then advances G. Only legal on the genus chains
// (n in {0, 1}); throws WrongChain otherwise.
CoordModel add_genus(const CoordModel& m);

// Puncture step: appends a_k, b_k (k depending on the chain) with the block
// 2 d(a_k) ^ d(b_k) + d(c_k) ^ d(a_k - b_k), then advances c. Throws
// WrongChain on models with no puncture chain (the closed chain).
CoordModel add_puncture(const CoordModel& m);

// Model for the surface of the given type, routing genus steps before
// puncture steps (so g >= 2, n >= 1 passes through the (g, 1) chart).
// Throws UnsupportedSurface for (0, <=4), (1, <=1) and anything with
// non-negative Euler characteristic.
CoordModel build(int g, int n);

// Integral points of the chart: all of Z^dim when there are no congruences,
// else the kernel of the congruence system, as a column_hermite basis.
IntegralLattice model_lattice(const CoordModel& m);

// The genus block Box_i over the context's coordinate space, reconstructed
// from the chain (the context must contain coordinates A_i..F_i).
TwoForm box_block(const CoordModel& context, int i);

// The identity behind the genus step: box^3 has coefficient +-24 (times 3!)
// on the block directions and the remainder is divisible by d(G_i).
// `block` lists the six block coordinate indices, ascending.
bool box_cube_identity(const TwoForm& box, const std::vector<int>& block,
                       const std::vector<Rational>& g_cov);

// box_cube_identity applied to Box_i inside the given context.
bool box_cube_check(int i, const CoordModel& context);

// Cross-checks one induction step against the exterior-algebra oracle:
// top(form_new ^ N') / N'! must equal (4 for genus, 2 for puncture) times
// top(form_old ^ N) / N!. Throws OracleTooLarge when the post-step dimension
// exceeds 14, and the step's own errors otherwise.
bool induction_step_check(const CoordModel& m, StepKind kind);

}  // namespace laminations
