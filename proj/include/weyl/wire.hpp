#pragma once

// JSON wire forms. QRat travels as the canonical string "(num)/(den)";
// CoefPoly as a list of {"u":int,"t":int,"d":int,"c":string} records;
// RingSpec as {"vars":[...],"inv":[...]}; GwaElem as {"components":{...}};
// WeightModule as {"dim":n,"u":...,"t":...,"d":...,"x":...,"y":...};
// HomIdealFamily as {"window":[lo,hi],"gens":{"m":[...]}}.

#include <json.hpp>

#include "weyl/modules.hpp"
#include "weyl/spectrum.hpp"

namespace weyl {

using nlohmann::json;

json to_wire(const QRat& v);
QRat qrat_from_wire(const json& j);

json to_wire(const RingSpec& r);
RingSpec ringspec_from_wire(const json& j);

json to_wire(const CoefPoly& p);
CoefPoly coefpoly_from_wire(const json& j, const RingSpec& ring);

json to_wire(const GwaElem& e);
GwaElem gwaelem_from_wire(const json& j, const GwaPtr& w);

json to_wire(const QMatrix& m);
QMatrix qmatrix_from_wire(const json& j);

json to_wire(const WeightModule& m);
WeightModule weightmodule_from_wire(const json& j, const GwaPtr& w);

json to_wire(const HomIdealFamily& f);
HomIdealFamily family_from_wire(const json& j, const GwaPtr& w);

json to_wire(const StratumDescriptor& s);
StratumDescriptor stratum_from_wire(const json& j);

json to_wire(const Report& r);

} // namespace weyl
