#pragma once

#include <string>
#include <vector>

#include "triangulene/edge.hpp"
#include "triangulene/lattice.hpp"
#include "triangulene/oracle.hpp"
#include "triangulene/spectrum.hpp"
#include "triangulene/states.hpp"

namespace triangulene {

/// 12 significant digits, lowercase scientific below 1e-4 in magnitude;
/// negative zero is normalized. Identical inputs give identical bytes.
std::string format_double(double x);

std::string lattice_json(const TrianguleneLattice& lat);

std::string spectrum_json(const SpectrumTable& table);
/// Rows (q, p, class, E_plus), one per quantized index point.
std::string spectrum_csv(int N);

/// Rows (sub, n1, n2, x, y, re, im) over the canonical site ordering.
std::string state_csv(const StateVector& state, const TrianguleneLattice& lat);
std::string state_json(const StateVector& state, const TrianguleneLattice& lat);
/// One circle per site, radius proportional to |amplitude|; real amplitudes
/// are coloured by sign, complex ones by phase.
std::string state_svg(const StateVector& state, const TrianguleneLattice& lat);

std::string edges_json(const EdgeBasis& basis, const TrianguleneLattice& lat);

std::string field_csv(const std::vector<FieldSample>& field);
std::string field_json(const std::vector<FieldSample>& field);

std::string verify_json(const VerifyReport& rep);

std::string chain_csv(const ChainSpectrum& chain);
std::string chain_json(const ChainSpectrum& chain);

std::string label_string(const StateLabel& label);

} // namespace triangulene
