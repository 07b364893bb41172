#pragma once

#include "taftyd/braiding.hpp"
#include "taftyd/modules.hpp"

#include "json.hpp"

namespace taftyd {

// All report formats use insertion-ordered objects so that identical inputs
// serialize to identical bytes.
using Json = nlohmann::ordered_json;

// ["num", "den"] with both integers as decimal strings; safe at any size.
Json rat_to_json(const Rat& r);

// {"order": n, "coeffs": [["num", "den"], ...]} over the power basis
// 1, zeta, ..., zeta^{deg-1} reduced mod the n-th cyclotomic polynomial.
Json cyclo_to_json(const Cyclo& c);

// Term list [[a, b, coeff], ...] for sum coeff * g^a x^b, ordered by (a, b).
Json hopf_to_json(const HopfElt& h);

// Dense row-major nested array of serialized entries.
Json matrix_to_json(const CycMat& m);

// {"params", "i", "j", "size", "entries": [[k, l, hopf], ...]} listing the
// lower triangle k >= l.
Json comatrix_to_json(const Comatrix& m);

// {"spec", "dim", "g_weights", "x_matrix", "coaction": [[k, l, hopf], ...],
// "truncated"}.
Json module_to_json(const YdModule& m);

// {"finite", "reason", "tags", "dim_module", "probe"}.
Json verdict_to_json(const NicholsVerdict& v);

// Copy of a JSON tree with every integer rewritten as its decimal string;
// used for the sweep file, whose schema stores all integers as strings.
Json stringify_integers(const Json& v);

}  // namespace taftyd
