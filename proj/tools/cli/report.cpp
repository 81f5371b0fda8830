#include "cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace tcl::cli {

namespace {

Json gens_json(const RIdeal& I) { return Json(I.format_gens()); }

// Reduced Groebner basis of the ideal, a canonical generating set.
Json basis_json(const RIdeal& I) {
  Json out = Json::array();
  for (const auto& g : I.basis().basis()) out.push_back(I.ring().format(g));
  return out;
}

bool scalar_list(const Json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const Json& x) {
           return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(),
                                                                   [](const Json& y) { return y.is_primitive(); }));
         });
}

std::string inline_value(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += inline_value(j[i]);
    }
    return out + "]";
  }
  return j.dump();
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !scalar_list(value))) {
        os << pad << key << ":\n";
        render(os, value, indent + 2);
      } else {
        os << pad << key << ": " << inline_value(value) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object()) {
        os << pad << "-\n";
        render(os, item, indent + 2);
      } else {
        os << pad << "- " << inline_value(item) << '\n';
      }
    }
  } else {
    os << pad << inline_value(j) << '\n';
  }
}

}  // namespace

void Report::caveat(const std::string& text) {
  for (const auto& c : caveats)
    if (c == text) return;
  caveats.push_back(text);
}

Json ring_json(const HypersurfaceRing& ring) {
  Json j;
  if (const auto& fd = ring.fermat_data()) {
    j["kind"] = "fermat";
    j["p"] = ring.characteristic().value();
    j["r"] = fd->r;
    j["d"] = fd->d;
  } else {
    j["kind"] = ring.has_relation() ? "hypersurface" : "polynomial";
    j["p"] = ring.characteristic().value();
  }
  j["vars"] = ring.vars();
  j["relation"] = ring.format(ring.relation());
  j["krull_dimension"] = ring.krull_dimension();
  j["formula_licensed"] = ring.formula_licensed();
  if (ring.is_fermat()) j["license_condition"] = ring.license_condition();
  return j;
}

Json closure_json(const ClosureResult& c) {
  Json j;
  j["power"] = c.power;
  j["method"] = to_string(c.method);
  j["maximal_power"] = c.maximal_power;
  j["generators"] = basis_json(c.ideal);
  j["length"] = length_of_quotient(c.ideal);
  j["licensed"] = c.licensed;
  j["conjectural"] = c.conjectural;
  j["license_condition"] = c.license_note;
  return j;
}

Json certificate_json(const Certificate& c) {
  const HypersurfaceRing& ring = c.ideal.ring();
  Json j;
  j["element"] = ring.format(c.element);
  j["ideal"] = gens_json(c.ideal);
  j["verdict"] = to_string(c.verdict);
  switch (c.verdict) {
    case Verdict::NotInTightClosure:
      j["q_witness"] = c.q;
      break;
    case Verdict::FrobeniusClosureMember:
      j["q"] = c.q;
      break;
    case Verdict::EvidenceIn:
    case Verdict::NoFrobeniusWitness:
      j["q_max"] = c.q;
      break;
  }
  j["q_checked"] = c.q_checked;
  j["test_element_note"] = c.test_element_note;
  return j;
}

Json slice_json(const SliceResult& s, const HypersurfaceRing& ring) {
  Json j;
  j["degree"] = s.degree;
  j["method"] = to_string(ClosureMethod::SliceApproximation);
  j["ambient_dimension"] = s.basis.size();
  j["ideal_dimension"] = s.ideal_dim;
  j["dimension"] = s.dimension();
  Json basis = Json::array();
  for (const auto& p : s.kernel) basis.push_back(ring.format(p));
  j["basis"] = std::move(basis);
  Json history = Json::array();
  for (auto [q, dim] : s.history) history.push_back(Json{{"q", q}, {"dimension", dim}});
  j["history"] = std::move(history);
  return j;
}

Json identity_json(const IdentityCheckReport& rep) {
  Json j;
  j["identity"] = rep.note;
  j["applicable"] = rep.applicable;
  j["overall"] = rep.overall;
  Json v = Json::array();
  for (auto [n, ok] : rep.verdicts) v.push_back(Json{{"n", n}, {"holds", ok}});
  j["verdicts"] = std::move(v);
  return j;
}

Json fit_json(const FitResult& fit) {
  Json j;
  j["coefficients"] = fit.coefficients;
  j["window"] = {fit.window_lo, fit.window_hi};
  j["validation_n"] = fit.validation_n;
  j["stabilized"] = fit.stabilized;
  return j;
}

Json huckaba_marley_json(const HuckabaMarleyResult& hm) {
  Json j;
  j["j"] = hm.j;
  j["value"] = hm.value;
  Json terms = Json::array();
  for (auto [n, len] : hm.terms) terms.push_back({n, len});
  j["terms"] = std::move(terms);
  j["stopped_at"] = hm.stopped_at;
  return j;
}

Json reduction_json(const ReductionData& data) {
  Json j;
  j["r_J_me"] = data.r_j_me;
  j["r_J_me_closed_form"] = data.closed_form_value;
  j["r_star"] = data.r_star;
  j["r_star_bound"] = data.r_star_bound;
  j["r_star_cap"] = data.r_star_cap;
  j["rees_cm"] = data.rees_cm;
  j["sufficient_condition"] = data.sufficient_condition;
  j["rationale"] = data.rationale;
  return j;
}

Json to_json(const Report& report) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["spec"] = report.spec;
  j["ring"] = report.ring;
  j["results"] = report.results;
  j["caveats"] = report.caveats;
  j["timing_ms"] = report.timing_ms ? Json(*report.timing_ms) : Json(nullptr);
  return j;
}

std::string emit_report(const Report& report, Format format) {
  if (format == Format::Json) return to_json(report).dump(2) + "\n";
  std::ostringstream os;
  const Json j = to_json(report);
  os << "ring\n";
  render(os, j["ring"], 2);
  if (!j["results"].empty()) {
    os << "results\n";
    render(os, j["results"], 2);
  }
  if (!j["caveats"].empty()) {
    os << "caveats\n";
    render(os, j["caveats"], 2);
  }
  if (report.timing_ms) os << "timing_ms: " << *report.timing_ms << '\n';
  return os.str();
}

}  // namespace tcl::cli
