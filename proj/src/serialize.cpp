#include "qsemi/serialize.hpp"

#include "qsemi/errors.hpp"  // for InvalidArgument

namespace qsemi {

  std::string to_string(GroupLabel g) {
    std::string out;
    if (g.t_exponent == 1) {
      out = "t";
    } else if (g.t_exponent > 1) {
      out = "t^" + std::to_string(g.t_exponent);
    }
    if (g.has_u) {
      out += out.empty() ? "u" : " u";
    }
    return out.empty() ? "1" : out;
  }

  json to_json(GroupTable const& g) {
    json elements = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
      json e;
      if (auto label = g.label(i)) {
        e["label"] = to_string(*label);
      }
      e["cycles"] = g[i].cycle_string();
      e["images"] = g[i].images();
      elements.push_back(std::move(e));
    }
    json out;
    out["degree"]   = g.degree();
    out["order"]    = g.size();
    out["elements"] = std::move(elements);
    return out;
  }

  json to_json(Counterexample const& c) {
    json out;
    out["permutations"] = json::object();
    for (auto const& [name, p] : c.permutations) {
      out["permutations"][name] = p.cycle_string();
    }
    out["indices"] = json::object();
    for (auto const& [name, i] : c.indices) {
      out["indices"][name] = i;
    }
    out["words"] = json::object();
    for (auto const& [name, w] : c.words) {
      out["words"][name] = to_string(w);
    }
    out["reason"] = c.reason;
    return out;
  }

  json to_json(LemmaReport const& r) {
    json out;
    out["lemma_id"] = lemma_name(r.lemma_id);
    out["k"]        = r.k;
    out["passed"]   = r.passed;
    if (r.counterexample) {
      out["counterexample"] = to_json(*r.counterexample);
    }
    out["instances"]       = r.instances;
    out["hypothesis_hits"] = r.hypothesis_hits;
    out["flagged"]         = r.flagged;
    return out;
  }

  json to_json(SweepSummary const& s) {
    json out;
    out["k"]             = s.k;
    out["max_len"]       = s.max_len;
    out["max_size"]      = s.max_size;
    out["specs_checked"] = s.specs_checked;
    if (s.specs_checked == 0) {
      out["min_unique_count"] = nullptr;
    } else {
      out["min_unique_count"] = s.min_unique_count;
    }
    out["elapsed_ms"] = s.elapsed_ms;
    out["complete"]   = s.complete;
    if (s.specs_total) {
      out["specs_total"] = static_cast<double>(*s.specs_total);
    }
    if (s.failure) {
      json f;
      f["grid_index"]   = s.failure->grid_index;
      f["unique_count"] = s.failure->unique_count;
      f["C"]            = json::array();
      for (auto const& w : s.failure->left) {
        f["C"].push_back(to_string(w));
      }
      f["D"] = json::array();
      for (auto const& w : s.failure->right) {
        f["D"].push_back(to_string(w));
      }
      out["failure"] = std::move(f);
    }
    return out;
  }

  json to_json(CancellationReport const& r) {
    json out;
    out["trials"]          = r.trials;
    out["antecedent_hits"] = r.antecedent_hits;
    out["nontrivial_hits"] = r.nontrivial_hits;
    if (r.violation) {
      auto const& v     = *r.violation;
      out["violation"] = {{"a", to_string(v.a)},
                          {"b", to_string(v.b)},
                          {"c", to_string(v.c)},
                          {"side", v.right_side ? "right" : "left"}};
    }
    return out;
  }

  json to_json(AlgebraElement const& x) {
    json terms = json::array();
    for (auto const& [w, c] : x.terms()) {
      terms.push_back({{"coef", c}, {"word", to_string(w)}});
    }
    return {{"p", x.modulus()}, {"terms", std::move(terms)}};
  }

  json to_json(ZeroDivisorResult const& r) {
    json out;
    out["trials"]     = r.trials;
    out["collisions"] = r.collisions;
    if (r.witness) {
      out["witness"] = {{"trial", *r.witness_trial},
                        {"x", to_json(r.witness->first)},
                        {"y", to_json(r.witness->second)}};
    }
    return out;
  }

  AlgebraElement element_from_json(json const& j, Normalizer const& nf) {
    try {
      auto const     p = j.at("p").get<AlgebraElement::coefficient_type>();
      AlgebraElement x(p);
      for (auto const& t : j.at("terms")) {
        Word const w = parse_word(t.at("word").get<std::string>(), nf.alphabet_size());
        x.add_term(nf.normal_form(w), t.at("coef").get<std::uint64_t>());
      }
      return x;
    } catch (json::exception const& e) {
      throw InvalidArgument(std::string("malformed algebra element: ") + e.what());
    }
  }

}  // namespace qsemi
