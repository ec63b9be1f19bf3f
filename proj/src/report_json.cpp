#include "picardlab/report_json.hpp"

#include <limits>
#include <stdexcept>

namespace picardlab {

Json integer_to_json(const Integer& value) {
  try {
    return to_int64(value);
  } catch (const std::overflow_error&) {
    return value.get_str();
  }
}

Integer integer_from_json(const Json& value) {
  if (value.is_string()) return Integer(value.get<std::string>());
  if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
  if (value.is_number_integer()) return Integer(std::to_string(value.get<std::int64_t>()));
  throw std::invalid_argument("expected an integer, got " + value.dump());
}

Json inventory_to_json(const SingInventory& inventory) {
  Json out = Json::array();
  // Map order: family, then index, ascending.
  for (const auto& [type, count] : inventory.entries()) {
    out.push_back({{"family", std::string(1, family_letter(type.family()))},
                   {"index", type.index()},
                   {"count", integer_to_json(count)}});
  }
  return out;
}

SingInventory inventory_from_json(const Json& value) {
  SingInventory out;
  for (const auto& e : value) {
    out.add(SingType::parse(e.at("family").get<std::string>() + std::to_string(e.at("index").get<int>())),
            integer_from_json(e.at("count")));
  }
  return out;
}

namespace {

Json base_to_json(const BaseSurface& base) {
  if (base.is_plane()) return {{"surface", "P2"}};
  return {{"surface", "F"}, {"e", base.e()}};
}

BaseSurface base_from_json(const Json& v) {
  const std::string s = v.at("surface").get<std::string>();
  if (s == "P2") return BaseSurface::projective_plane();
  if (s == "F") return BaseSurface::hirzebruch(v.at("e").get<int>());
  throw std::invalid_argument("unknown base surface " + s);
}

Json class_to_json(const DivisorClass& d) {
  if (d.surface().is_plane()) return {{"H", integer_to_json(d.degree())}};
  return {{"D0", integer_to_json(d.section_coeff())}, {"F", integer_to_json(d.fiber_coeff())}};
}

DivisorClass class_from_json(const BaseSurface& base, const Json& v) {
  if (base.is_plane()) return DivisorClass::plane(integer_from_json(v.at("H")));
  return DivisorClass::hirzebruch(base, integer_from_json(v.at("D0")), integer_from_json(v.at("F")));
}

Json classes_to_json(const std::array<DivisorClass, 3>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(class_to_json(c));
  return out;
}

std::array<DivisorClass, 3> classes_from_json(const BaseSurface& base, const Json& v) {
  if (v.size() != 3) throw std::invalid_argument("expected three divisor classes");
  return {class_from_json(base, v[0]), class_from_json(base, v[1]), class_from_json(base, v[2])};
}

Json building_data_to_json(const BuildingData& data) {
  if (const auto* d = std::get_if<DoubleCoverData>(&data)) {
    return {{"cover", "double"}, {"base", base_to_json(d->base)}, {"L", class_to_json(d->L)}, {"B", class_to_json(d->B)}};
  }
  const auto& b = std::get<BidoubleCoverData>(data);
  return {{"cover", "bidouble"}, {"base", base_to_json(b.base)}, {"L", classes_to_json(b.L)}, {"B", classes_to_json(b.B)}};
}

BuildingData building_data_from_json(const Json& v) {
  const BaseSurface base = base_from_json(v.at("base"));
  const std::string cover = v.at("cover").get<std::string>();
  if (cover == "double") {
    DoubleCoverData d;
    d.base = base;
    d.L = class_from_json(base, v.at("L"));
    d.B = class_from_json(base, v.at("B"));
    return d;
  }
  if (cover != "bidouble") throw std::invalid_argument("unknown cover kind " + cover);
  BidoubleCoverData b;
  b.base = base;
  b.L = classes_from_json(base, v.at("L"));
  b.B = classes_from_json(base, v.at("B"));
  return b;
}

Json site_to_json(const Site& site) {
  if (std::holds_alternative<OffSpecialLoci>(site)) return {{"kind", "off_special_loci"}};
  if (const auto* f = std::get_if<OnBranchFiberTransversal>(&site)) {
    return {{"kind", "on_branch_fiber_transversal"}, {"n", f->parity_n}};
  }
  const auto& b = std::get<BidoubleSite>(site);
  return {{"kind", "bidouble"}, {"carrier", b.carrier}, {"others", b.others}, {"contact", b.contact}};
}

Site site_from_json(const Json& v) {
  const std::string kind = v.at("kind").get<std::string>();
  if (kind == "off_special_loci") return OffSpecialLoci{};
  if (kind == "on_branch_fiber_transversal") return OnBranchFiberTransversal{v.at("n").get<int>()};
  if (kind == "bidouble") {
    return BidoubleSite{v.at("carrier").get<int>(), v.at("others").get<std::vector<int>>(), v.at("contact").get<int>()};
  }
  throw std::invalid_argument("unknown site kind " + kind);
}

Json scenario_to_json(const BranchSingScenario& scenario) {
  Json out = Json::array();
  for (const auto& e : scenario) {
    out.push_back({{"germ", e.germ ? Json(e.germ->name()) : Json(nullptr)},
                   {"site", site_to_json(e.site)},
                   {"count", integer_to_json(e.count)},
                   {"note", e.note}});
  }
  return out;
}

BranchSingScenario scenario_from_json(const Json& v) {
  BranchSingScenario out;
  for (const auto& e : v) {
    ScenarioEntry entry;
    if (!e.at("germ").is_null()) entry.germ = SingType::parse(e.at("germ").get<std::string>());
    entry.site = site_from_json(e.at("site"));
    entry.count = integer_from_json(e.at("count"));
    entry.note = e.at("note").get<std::string>();
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

Json report_to_json(const ConstructionReport& r) {
  Json params = Json::object();
  if (r.params.m) params["m"] = *r.params.m;
  params["n"] = r.params.n;
  const auto& c = r.computed;
  return {
      {"theorem", r.params.theorem},
      {"params", params},
      {"building_data", building_data_to_json(r.building_data)},
      {"branch_scenario", scenario_to_json(r.branch_scenario)},
      {"base_branch_inventory", inventory_to_json(r.base_branch_inventory)},
      {"cover_inventory", inventory_to_json(r.cover_inventory)},
      {"computed",
       {{"K2", integer_to_json(c.K2)},
        {"chi", integer_to_json(c.chi)},
        {"p_g", integer_to_json(c.p_g)},
        {"q", integer_to_json(c.q)},
        {"h11", integer_to_json(c.h11)}}},
      {"closed_form", {{"K2", integer_to_json(r.closed_form.K2)}, {"chi", integer_to_json(r.closed_form.chi)}}},
      {"n_indep", r.n_indep},
      {"ample", r.ample},
      {"picard_lower", integer_to_json(r.picard_lower)},
      {"h11", integer_to_json(r.h11)},
      {"maximal", r.maximal},
      {"match", r.match},
      {"center_off_curve", r.center_off_curve},
      {"curve_spot_check", r.curve_spot_check ? Json(*r.curve_spot_check) : Json(nullptr)},
  };
}

ConstructionReport report_from_json(const Json& v) {
  ConstructionReport r;
  r.params.theorem = v.at("theorem").get<int>();
  const Json& p = v.at("params");
  if (p.contains("m")) r.params.m = p.at("m").get<int>();
  r.params.n = p.at("n").get<int>();
  r.building_data = building_data_from_json(v.at("building_data"));
  r.branch_scenario = scenario_from_json(v.at("branch_scenario"));
  r.base_branch_inventory = inventory_from_json(v.at("base_branch_inventory"));
  r.cover_inventory = inventory_from_json(v.at("cover_inventory"));
  const Json& c = v.at("computed");
  r.computed = {integer_from_json(c.at("K2")), integer_from_json(c.at("chi")), integer_from_json(c.at("p_g")),
                integer_from_json(c.at("q")), integer_from_json(c.at("h11"))};
  r.closed_form = {integer_from_json(v.at("closed_form").at("K2")), integer_from_json(v.at("closed_form").at("chi"))};
  r.n_indep = v.at("n_indep").get<int>();
  r.ample = v.at("ample").get<bool>();
  r.picard_lower = integer_from_json(v.at("picard_lower"));
  r.h11 = integer_from_json(v.at("h11"));
  r.maximal = v.at("maximal").get<bool>();
  r.match = v.at("match").get<bool>();
  r.center_off_curve = v.at("center_off_curve").get<bool>();
  if (!v.at("curve_spot_check").is_null()) r.curve_spot_check = v.at("curve_spot_check").get<bool>();
  return r;
}

std::string serialize(const Json& value) { return value.dump(2) + "\n"; }

}  // namespace picardlab
