#pragma once

#include <ostream>
#include <span>

#include <nlohmann/json.hpp>

#include "toyscatter/hypervolume.hpp"
#include "toyscatter/montecarlo.hpp"
#include "toyscatter/relations.hpp"
#include "toyscatter/residue.hpp"

namespace toyscatter {

// Serialized forms keep insertion order so output is byte-stable.
// Exact values are "p/q" strings; decimals are 12 significant digits and
// only for reading.

using Json = nlohmann::ordered_json;

inline constexpr int kDecimalDigits = 12;

/// {"value": "p/q", "decimal": "...", "method": "...", "residues": [...]}
/// plus "epsilon" for the epsilon method.
Json to_json(const MethodReport& r);
Json to_json(const SimReport& r);
Json to_json(const VolumeEstimate& v);
/// {"p": "p/q", "decimal": "...", "verdict": "beats|matched|loses"}
Json to_json(const RelationVerdict& v);
Json to_json(const CycleWitness& w);
Json to_json(const Instance& inst);

/// Header "x,y" then one row per point, 12 significant digits each.
void write_curve_csv(std::ostream& os, std::span<const CurvePoint> points);

}  // namespace toyscatter
