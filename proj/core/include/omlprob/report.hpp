#pragma once

#include <span>
#include <string>

#include "omlprob/analysis.hpp"
#include "omlprob/bimap.hpp"
#include "omlprob/feasibility.hpp"
#include "omlprob/lattice.hpp"
#include "omlprob/lattice_io.hpp"
#include "omlprob/states.hpp"

namespace omlprob {

/// JSON renderings of every report type. Rationals are always "p/q"
/// strings; elements are rendered by name.

Json rat_json(const Rat& r);
Json elements_json(const Oml& l, std::span<const Elem> elems);

Json to_json(const LatticeViolation& v);
Json to_json(const Oml& l, const PairClass& c);
Json to_json(const LinSystem& sys, const PolyInfo& info);
Json to_json(const Oml& l, const StateClass& c);
Json to_json(const Oml& l, const StateViolation& v);
Json to_json(const Oml& l, const AxiomReport& r);
Json to_json(const FamilyTag& t);
Json to_json(const Oml& l, const IdentityReport& r);
Json to_json(const Oml& l, const SemanticReport& r);
Json to_json(const Oml& l, const PurityResult& r);
Json to_json(const Oml& l, const PseudometricReport& r);
/// With `with_certificates`, every instance is listed with its multipliers.
Json to_json(const Oml& l, const PropertyVerdict& v, bool with_certificates = false);
Json to_json(std::span<const std::string> names, std::span<const Oml> lattices,
             const SweepReport& r);

std::string gamma_label(const FamilyTag& t);

}  // namespace omlprob
