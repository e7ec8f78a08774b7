#pragma once

#include "latreal/catalog.hpp"
#include "latreal/screening.hpp"

#include <json.hpp>

namespace latreal {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);                 // "p/q" string
Json to_json(const AffineExpr& e);               // affine string
Json to_json(const AffineMatrix& m);
Json to_json(const RationalMatrix& m);
Json to_json(const GeneralizedCartan& a);
Json to_json(const BraidingDiagram& d);          // grammar string
Json to_json(const Family& f);
Json to_json(const RealisationReport& r);
Json to_json(const GroupoidGraph& g);
Json to_json(const std::vector<RelationReportEntry>& report);

Rational rational_from_json(const Json& j, const std::string& path);
AffineExpr affine_from_json(const Json& j, const std::string& path);

} // namespace latreal
