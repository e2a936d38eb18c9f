#include "ukb/json_io.hpp"

namespace ukb {

Json universe_to_json(const Universe& u) {
  Json j;
  j["id"] = u.id();
  switch (u.kind()) {
    case UniverseKind::Grid:
      j["kind"] = "grid";
      j["min"] = u.grid_min();
      j["max"] = u.grid_max();
      j["step"] = u.grid_step();
      j["size"] = u.size();
      break;
    case UniverseKind::Labeled:
      j["kind"] = "labels";
      j["labels"] = u.label_list();
      break;
    case UniverseKind::Product:
      j["kind"] = "product";
      j["left"] = universe_to_json(*u.left());
      j["right"] = universe_to_json(*u.right());
      break;
  }
  return j;
}

Json granule_to_json(const Granule& g) {
  Json j;
  if (g.vars().size() == 1) {
    j["variable"] = g.vars()[0];
  } else {
    j["variable"] = g.vars();
  }
  j["universe"] = universe_to_json(*g.universe());
  Json focals = Json::array();
  for (const Focal& f : g.focals()) {
    Json jf;
    jf["grades"] = f.set.grades();
    jf["weight"] = f.weight;
    focals.push_back(std::move(jf));
  }
  j["focals"] = std::move(focals);
  if (g.conflict() > 0.0) j["conflict"] = g.conflict();
  return j;
}

Json report_to_json(const BoundsReport& r) {
  Json j;
  j["bel"] = r.bel;
  j["pl"] = r.pl;
  j["estimate"] = r.estimate;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["pass"] = r.pass;
  return j;
}

}  // namespace ukb
