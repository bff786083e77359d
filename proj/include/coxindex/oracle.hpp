#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "coxindex/graph.hpp"
#include "coxindex/lambda.hpp"
#include "coxindex/spectrum.hpp"

// Brute-force reference implementations. They transcribe the definitions over all
// vertex subsets and share nothing with the optimized path except graph primitives.
namespace coxindex::oracle {

inline constexpr int kOmegaPsiCap = 16;
inline constexpr int kSpectrumCap = 12;
inline constexpr int kCensusCap = 7;

struct OmegaPsi {
    std::vector<VertexSet> wide;
    std::vector<VertexSet> strips;
};

/// Families of vertex sets per level, canonical order within each level.
struct LambdaFamilies {
    std::vector<std::vector<VertexSet>> levels;
    bool covered = false;
    bool stabilized = false;
    int steps = 0;
};

OmegaPsi brute_omega_psi(const SimplicialGraph& g);
LambdaFamilies brute_lambda(const SimplicialGraph& g);
IndexReport brute_index(const SimplicialGraph& g);
SpectrumReport brute_spectrum(const SimplicialGraph& g);

/// Number of labelled graphs on n vertices.
std::uint64_t census_size(int n);

/// Streams every labelled graph on n vertices in edge-mask order (bit i of the mask
/// is the i-th pair (a,b), a<b, in lexicographic order).
void enumerate_all_graphs(int n, const std::function<void(const SimplicialGraph&)>& visit);
SimplicialGraph graph_from_mask(int n, std::uint64_t mask);

/// Outcome of comparing the optimized path with the oracle on one graph.
struct Diff {
    bool omega_equal = true;
    bool psi_equal = true;
    bool lambda_equal = true;
    bool index_equal = true;
    bool spectrum_checked = false;
    bool spectrum_equal = true;
    bool ok() const { return omega_equal && psi_equal && lambda_equal && index_equal && spectrum_equal; }
};

/// Compares Omega, Psi, the lambda levels and the index; the spectrum too when the
/// graph is within the spectrum oracle cap and `with_spectrum` is set.
Diff diff(const SimplicialGraph& g, bool with_spectrum = false);

}  // namespace coxindex::oracle
