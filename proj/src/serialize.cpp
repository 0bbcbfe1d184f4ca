#include "qsc/serialize.hpp"

#include <json.hpp>

namespace qsc {

using nlohmann::json;

namespace {

json witness_object(const char* kind, std::uint64_t x0,
                    const std::vector<std::uint64_t>& elements,
                    const std::vector<std::uint32_t>& indices) {
    return json{{"kind", kind}, {"x0", x0}, {"elements", elements}, {"indices", indices}};
}

json parse_kind(const std::string& text, const char* kind) {
    json value = json::parse(text);
    if (value.at("kind").get<std::string>() != kind)
        throw argument_error(std::string("witness JSON is not of kind ") + kind);
    return value;
}

} // namespace

std::string witness_to_json(const SubsetCoverWitness& w) {
    return witness_object("sc", w.x0, w.coverers, {}).dump();
}

std::string witness_to_json(const RestrictedSCWitness& w) {
    return witness_object("rsc", w.x0, w.partners, {}).dump();
}

std::string witness_to_json(const RepetitionWitness& w) {
    return witness_object("repetition", w.x, {}, w.indices).dump();
}

SubsetCoverWitness sc_witness_from_json(const std::string& text) {
    const json value = parse_kind(text, "sc");
    return SubsetCoverWitness{value.at("x0").get<std::uint64_t>(),
                              value.at("elements").get<std::vector<std::uint64_t>>()};
}

RestrictedSCWitness rsc_witness_from_json(const std::string& text) {
    const json value = parse_kind(text, "rsc");
    return RestrictedSCWitness{value.at("x0").get<std::uint64_t>(),
                               value.at("elements").get<std::vector<std::uint64_t>>()};
}

RepetitionWitness repetition_witness_from_json(const std::string& text) {
    const json value = parse_kind(text, "repetition");
    return RepetitionWitness{value.at("x0").get<std::uint64_t>(),
                             value.at("indices").get<std::vector<std::uint32_t>>()};
}

std::string ledger_to_json(const QueryLedger& ledger) {
    return json{{"quantum_queries", ledger.quantum_queries},
                {"classical_evals", ledger.classical_evals},
                {"grover_runs", ledger.grover_runs}}
        .dump();
}

QueryLedger ledger_from_json(const std::string& text) {
    const json value = json::parse(text);
    return QueryLedger{value.at("quantum_queries").get<std::uint64_t>(),
                       value.at("classical_evals").get<std::uint64_t>(),
                       value.at("grover_runs").get<std::uint64_t>()};
}

} // namespace qsc
