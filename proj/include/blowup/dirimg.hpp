#ifndef BLOWUP_DIRIMG_HPP
#define BLOWUP_DIRIMG_HPP

#include <vector>

#include "blowup/bundle.hpp"
#include "blowup/cech.hpp"
#include "blowup/xypoly.hpp"

namespace blowup {

// Finitely generated module over the power-series ring in (x, y), truncated
// at total degree trunc_degree. For the direct-image module the generators
// are realized sections (pairs of BiLaurent); for duals they are vectors of
// coordinates against the generators of the module being dualized.
struct ModulePresentation {
    std::size_t gens = 0;
    long trunc_degree = 0;
    std::vector<std::vector<XYPoly>> rels;         // columns, each of size gens
    std::vector<long> degree_tags;                  // filtration degree per generator
    std::vector<std::vector<BiLaurent>> sections;   // primal only
    std::vector<std::vector<XYPoly>> gen_vectors;   // duals only
};

// Sections of b organized as a module over x = u, y = z*u: minimal
// generators selected by increasing u-degree, relations by exact syzygy
// solve up to degree D.
ModulePresentation pushforward_module(const BundleV& b, long D);
// Same, with the spec'd stabilization check (generator count equal at D and
// D+2); throws NonStabilized otherwise.
ModulePresentation pushforward_module_checked(const BundleV& b, long D);

// { phi in R^gens : phi annihilates every relation, degree by degree }.
ModulePresentation dualize(const ModulePresentation& p, long D);

// The evaluation map rho: M -> M** (generator m |-> (phi |-> phi(m))),
// expressed against the generators of the double dual.
struct EvalMap {
    std::vector<std::vector<XYPoly>> rho;  // gens(M) x gens(M**)
};

struct LqComputation {
    long lq = 0;
    bool plateau = false;       // coker dimension settled inside this degree cap
    long D = 0;
    ModulePresentation M;
    ModulePresentation dual;
    ModulePresentation bidual;
    EvalMap eval;
};

LqComputation lq_at(const BundleV& b, long D);

struct LqResult {
    long lq = 0;
    long D = 0;  // degree cap at stabilization
    int steps = 0;
};

// Degree-cap schedule: D = 2j+2, +2 per step, stable when generator count,
// relation count and coker dimension agree at D and D+2; at most 5 steps.
LqResult lq_oracle_full(const BundleV& b);
long lq_oracle(const BundleV& b);

// l(Q) + l(R^1): the local charge.
long charge(const BundleV& b);

}  // namespace blowup

#endif
