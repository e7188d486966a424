#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tanglekit/certify.hpp"
#include "tanglekit/embedding.hpp"
#include "tanglekit/error.hpp"
#include "tanglekit/graph.hpp"
#include "tanglekit/guards.hpp"
#include "tanglekit/minor.hpp"
#include "tanglekit/paths.hpp"
#include "tanglekit/radial.hpp"
#include "tanglekit/report.hpp"
#include "tanglekit/spider.hpp"
#include "tanglekit/tangle.hpp"
#include "tanglekit/vortex.hpp"

// JSON forms of the library's values, found by nlohmann::json through ADL.
// Maps keyed by vertex or edge id become objects with decimal string keys.
// The layouts are documented in docs/certificate_schema.md.
namespace tk {

using nlohmann::json;

void to_json(json& j, const MultiGraph& g);
void from_json(const json& j, MultiGraph& g);
void to_json(json& j, const SubgraphRef& r);
void from_json(const json& j, SubgraphRef& r);
void to_json(json& j, const Path& p);
void from_json(const json& j, Path& p);
void to_json(json& j, const Separation& s);
void from_json(const json& j, Separation& s);
void to_json(json& j, const Tangle& t);
void from_json(const json& j, Tangle& t);
void to_json(json& j, const MinorModel& m);
void from_json(const json& j, MinorModel& m);
void to_json(json& j, const SubdivisionModel& m);
void from_json(const json& j, SubdivisionModel& m);
void to_json(json& j, const RotationEmbedding& e);
void from_json(const json& j, RotationEmbedding& e);
void to_json(json& j, const Face& f);
void to_json(json& j, const Spider& s);
void from_json(const json& j, Spider& s);
void to_json(json& j, const DichotomyResult& r);
void to_json(json& j, const Society& s);
void from_json(const json& j, Society& s);
void to_json(json& j, const Neighborhood& n);
void from_json(const json& j, Neighborhood& n);
void to_json(json& j, const RuralWitness& w);
void from_json(const json& j, RuralWitness& w);
void to_json(json& j, const LinearDecomposition& d);
void from_json(const json& j, LinearDecomposition& d);
void to_json(json& j, const CheckReport& r);
void to_json(json& j, const TangleReport& r);
void to_json(json& j, const CentralityReport& r);
void to_json(json& j, const DiskAssignment& d);
void from_json(const json& j, DiskAssignment& d);
void to_json(json& j, const ArrangementCertificate& c);
void from_json(const json& j, ArrangementCertificate& c);
void to_json(json& j, const OutcomeParams& p);
void from_json(const json& j, OutcomeParams& p);
void to_json(json& j, const OutcomeCertificate& c);
void from_json(const json& j, OutcomeCertificate& c);
void to_json(json& j, const Verdict& v);
void from_json(const json& j, Verdict& v);
void to_json(json& j, const Guards& g);
void to_json(json& j, const Atom& a);
void from_json(const json& j, Atom& a);
void to_json(json& j, const AtomMetric& m);
void to_json(json& j, const ZoneWitness& w);
void from_json(const json& j, ZoneWitness& w);

/// One row per atom pair (a, b) with a listed before or equal to b.
std::string metric_csv(const AtomMetric& m);

/// Parses text into a value, turning every JSON error into InputError.
template <class T>
T parse_json_as(std::string_view text) {
  try {
    return json::parse(text).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace tk
