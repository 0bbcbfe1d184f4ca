#pragma once

#include <string>

#include "qsc/grover.hpp"
#include "qsc/witness.hpp"

namespace qsc {

/// Witness wire format: {"kind", "x0", "elements", "indices"}.
/// kind "sc": elements = coverers; "rsc": elements = partners;
/// "repetition": x0 = the element, indices = function indices.
std::string witness_to_json(const SubsetCoverWitness& w);
std::string witness_to_json(const RestrictedSCWitness& w);
std::string witness_to_json(const RepetitionWitness& w);

SubsetCoverWitness sc_witness_from_json(const std::string& text);
RestrictedSCWitness rsc_witness_from_json(const std::string& text);
RepetitionWitness repetition_witness_from_json(const std::string& text);

/// {"quantum_queries", "classical_evals", "grover_runs"}.
std::string ledger_to_json(const QueryLedger& ledger);
QueryLedger ledger_from_json(const std::string& text);

} // namespace qsc
