#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cayley/common.hpp"
#include "cayley/dihedral.hpp"
#include "cayley/engine.hpp"
#include "cayley/graph.hpp"
#include "cayley/heisenberg.hpp"

namespace cayley {

using json = nlohmann::json;  // keys serialize sorted, so dumps are canonical

// ---------------------------------------------------------------------------
// kind "semidirect": the full (K, phi, S, V) data plus one solution per
// element. All indices are 0-based.
// ---------------------------------------------------------------------------

inline json certificate_to_json(const Certificate& cert) {
  const GeneratorSpec& spec = cert.spec;
  json j;
  j["format_version"] = 1;
  j["kind"] = "semidirect";
  j["k"] = spec.k;
  j["s"] = spec.S.size();
  j["directed"] = spec.directed;
  j["forbid_adjacent_inverse"] = spec.forbid_adjacent_inverse;
  j["group_spec"] = spec.group_spec_text;
  j["group_order"] = spec.K->order();

  json hom;
  hom["generators"] = spec.K->generator_labels();
  json images = json::array();
  for (const auto& img : spec.phi.generator_images()) {
    json arr = json::array();
    for (auto v : img.map) arr.push_back(static_cast<int>(v));
    images.push_back(std::move(arr));
  }
  hom["images"] = std::move(images);
  j["hom"] = std::move(hom);

  json sarr = json::array();
  for (elem_t e : spec.S) sarr.push_back(json{{"index", e}, {"word", spec.K->label(e)}});
  j["S"] = std::move(sarr);

  json varr = json::array();
  for (const auto& v : spec.V) varr.push_back(bitvec_string(v));
  j["V"] = std::move(varr);

  if (!spec.directed)
    j["pairing"] = spec.pairing;
  else
    j["pairing"] = nullptr;

  json sols = json::array();
  for (const auto& sol : cert.solutions) {
    json s;
    s["element"] = sol.target;
    s["element_word"] = spec.K->label(sol.target);
    s["U"] = sol.str.u;
    json rows = json::array();
    for (int r = 0; r < sol.m_inverse.rows; ++r) {
      json row = json::array();
      for (int c = 0; c < sol.m_inverse.cols; ++c) row.push_back(sol.m_inverse.at(r, c));
      rows.push_back(std::move(row));
    }
    s["M_inverse"] = std::move(rows);
    sols.push_back(std::move(s));
  }
  j["solutions"] = std::move(sols);
  j["ratio"] = json{{"num", cert.ratio.num}, {"den", cert.ratio.den}};
  return j;
}

inline Certificate certificate_from_json(const json& j) {
  require(j.value("format_version", 0) == 1, errc::invalid_input,
          "unknown certificate format version");
  require(j.value("kind", "") == "semidirect", errc::invalid_input,
          "not a semidirect certificate");
  Certificate cert;
  GeneratorSpec& spec = cert.spec;
  spec.k = j.at("k").get<int>();
  spec.directed = j.at("directed").get<bool>();
  spec.forbid_adjacent_inverse = j.value("forbid_adjacent_inverse", true);
  spec.group_spec_text = j.at("group_spec").get<std::string>();
  auto K = std::make_shared<TableGroup>(build_group(spec.group_spec_text));
  require(K->order() == j.at("group_order").get<std::uint64_t>(), errc::verification_failed,
          "group order in certificate does not match the spec");
  spec.K = K;

  const json& hom = j.at("hom");
  require(hom.at("generators").get<std::vector<std::string>>() == K->generator_labels(),
          errc::verification_failed, "generator labels do not match the group spec");
  std::vector<CoordPerm> gen_images;
  for (const auto& arr : hom.at("images")) {
    std::vector<std::uint8_t> map;
    for (const auto& v : arr) map.push_back(static_cast<std::uint8_t>(v.get<int>()));
    CoordPerm p(std::move(map));
    require(p.is_valid() && p.degree() == spec.k, errc::verification_failed,
            "homomorphism image is not a coordinate permutation");
    gen_images.push_back(std::move(p));
  }
  spec.phi = GroupHom::from_generator_images(K, gen_images);

  for (const auto& s : j.at("S")) {
    elem_t e = s.at("index").get<elem_t>();
    require(e < K->order(), errc::verification_failed, "set element out of range");
    require(s.at("word").get<std::string>() == K->label(e), errc::verification_failed,
            "set element word does not match its index");
    spec.S.push_back(e);
  }
  for (const auto& v : j.at("V")) spec.V.push_back(bitvec_parse(v.get<std::string>()));

  for (const auto& s : j.at("solutions")) {
    ElementSolution sol;
    sol.target = s.at("element").get<elem_t>();
    sol.str.u = s.at("U").get<std::vector<int>>();
    const json& rows = s.at("M_inverse");
    sol.m_inverse = IntMat(spec.k, spec.k);
    require(rows.size() == static_cast<std::size_t>(spec.k), errc::verification_failed,
            "inverse matrix has wrong shape");
    for (int r = 0; r < spec.k; ++r) {
      require(rows[static_cast<std::size_t>(r)].size() == static_cast<std::size_t>(spec.k),
              errc::verification_failed, "inverse matrix has wrong shape");
      for (int c = 0; c < spec.k; ++c)
        sol.m_inverse.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                                     .get<long long>();
    }
    cert.solutions.push_back(std::move(sol));
  }
  cert.ratio.num = j.at("ratio").at("num").get<std::uint64_t>();
  cert.ratio.den = j.at("ratio").at("den").get<std::uint64_t>();
  // pairing is re-derived (and checked) by validation during verification
  return cert;
}

// ---------------------------------------------------------------------------
// kind "dihedral": the parameterized vectors plus a good string per element.
// Strings use letters r, R (r inverse), s.
// ---------------------------------------------------------------------------

inline json dihedral_certificate_to_json(const GoodStringTable& table,
                                         const std::vector<unsigned>& verified_m) {
  int k = table.k;
  DihedralVectors vecs = dihedral_vectors(k);
  json j;
  j["format_version"] = 1;
  j["kind"] = "dihedral";
  j["k"] = k;
  j["q"] = (k - 1) / 2;
  j["vectors"] = json{{"r", bitvec_string(vecs.v_r)},
                      {"r_inv", bitvec_string(vecs.v_rinv)},
                      {"s", bitvec_string(vecs.v_s)}};
  json rows = json::array();
  for (const auto& [elem, str] : table.entries)
    rows.push_back(json{{"element", delem_text(k, elem)},
                        {"rot", elem.rot},
                        {"flip", elem.flip},
                        {"string", dstring_text(str)}});
  j["table"] = std::move(rows);
  j["verified_m"] = verified_m;
  return j;
}

struct DihedralCertificate {
  GoodStringTable table;
  std::vector<unsigned> verified_m;
};

inline DihedralCertificate dihedral_certificate_from_json(const json& j) {
  require(j.value("format_version", 0) == 1, errc::invalid_input,
          "unknown certificate format version");
  require(j.value("kind", "") == "dihedral", errc::invalid_input, "not a dihedral certificate");
  DihedralCertificate cert;
  cert.table.k = j.at("k").get<int>();
  int k = cert.table.k;
  require(j.at("q").get<int>() == (k - 1) / 2, errc::verification_failed, "q does not match k");
  DihedralVectors vecs = dihedral_vectors(k);
  require(j.at("vectors").at("r").get<std::string>() == bitvec_string(vecs.v_r) &&
              j.at("vectors").at("r_inv").get<std::string>() == bitvec_string(vecs.v_rinv) &&
              j.at("vectors").at("s").get<std::string>() == bitvec_string(vecs.v_s),
          errc::verification_failed, "vectors do not match the construction for this k");
  for (const auto& row : j.at("table")) {
    DElem e{row.at("rot").get<int>(), row.at("flip").get<int>()};
    cert.table.entries.emplace_back(e, dstring_parse(row.at("string").get<std::string>()));
  }
  if (j.contains("verified_m")) cert.verified_m = j.at("verified_m").get<std::vector<unsigned>>();
  return cert;
}

/// Rechecks a dihedral certificate: every element present, every string good,
/// then an exact diameter computation at modulus m.
inline VerifyOutcome verify_dihedral_certificate(const DihedralCertificate& cert, unsigned m) {
  VerifyOutcome out;
  int k = cert.table.k;
  std::vector<char> seen(static_cast<std::size_t>(2 * k), 0);
  for (const auto& [elem, str] : cert.table.entries) {
    std::size_t idx = static_cast<std::size_t>(elem.flip) * k + elem.rot;
    if (elem.rot < 0 || elem.rot >= k || (elem.flip != 0 && elem.flip != 1) || seen[idx]) {
      out.ok = false;
      out.message = "bad or duplicate element " + delem_text(k, elem);
      return out;
    }
    seen[idx] = 1;
    if (static_cast<int>(str.size()) != k || !(dstring_value(k, str) == elem) ||
        !is_good_string(k, str)) {
      out.ok = false;
      out.message = "string for element " + delem_text(k, elem) + " is not good";
      return out;
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) {
      out.ok = false;
      out.message = "element missing from table";
      return out;
    }
  auto graph = build_dihedral_graph(k, m);
  out.report = diameter(graph);
  if (out.report.diameter != static_cast<std::uint32_t>(k)) {
    out.ok = false;
    out.message = "diameter is " + std::to_string(out.report.diameter) + ", expected " +
                  std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------------------
// kind "heisenberg": the three generator subsets and the graph report.
// Elements are stored as [a, b, c, eps].
// ---------------------------------------------------------------------------

inline json heisenberg_certificate_to_json(const HeisGenset& set, const DiameterReport& report) {
  HeisenbergGroup g(set.p);
  auto dump = [&](const std::vector<elem_t>& elems) {
    json arr = json::array();
    for (elem_t e : elems) {
      HeisElem h = g.decode(e);
      arr.push_back(json::array({h.a, h.b, h.c, h.eps}));
    }
    return arr;
  };
  json j;
  j["format_version"] = 1;
  j["kind"] = "heisenberg";
  j["p"] = set.p;
  j["S1"] = dump(set.s1);
  j["S2"] = dump(set.s2);
  j["S3"] = dump(set.s3);
  j["report"] = json{{"order", report.order},
                     {"degree", report.degree},
                     {"diameter", report.diameter},
                     {"histogram", report.histogram}};
  return j;
}

struct HeisenbergCertificate {
  HeisGenset set;
  DiameterReport report;
};

inline HeisenbergCertificate heisenberg_certificate_from_json(const json& j) {
  require(j.value("format_version", 0) == 1, errc::invalid_input,
          "unknown certificate format version");
  require(j.value("kind", "") == "heisenberg", errc::invalid_input,
          "not a heisenberg certificate");
  HeisenbergCertificate cert;
  cert.set.p = j.at("p").get<unsigned>();
  HeisenbergGroup g(cert.set.p);
  auto load = [&](const json& arr) {
    std::vector<elem_t> out;
    for (const auto& row : arr) {
      require(row.size() == 4, errc::invalid_input, "elements are stored as [a,b,c,eps]");
      out.push_back(g.encode({row[0].get<unsigned>(), row[1].get<unsigned>(),
                              row[2].get<unsigned>(), row[3].get<unsigned>()}));
    }
    return out;
  };
  cert.set.s1 = load(j.at("S1"));
  cert.set.s2 = load(j.at("S2"));
  cert.set.s3 = load(j.at("S3"));
  cert.set.all = cert.set.s1;
  cert.set.all.insert(cert.set.all.end(), cert.set.s2.begin(), cert.set.s2.end());
  cert.set.all.insert(cert.set.all.end(), cert.set.s3.begin(), cert.set.s3.end());
  std::sort(cert.set.all.begin(), cert.set.all.end());
  cert.set.all.erase(std::unique(cert.set.all.begin(), cert.set.all.end()), cert.set.all.end());
  const json& rep = j.at("report");
  cert.report.order = rep.at("order").get<std::uint64_t>();
  cert.report.degree = rep.at("degree").get<std::uint32_t>();
  cert.report.diameter = rep.at("diameter").get<std::uint32_t>();
  cert.report.histogram = rep.at("histogram").get<std::vector<std::uint64_t>>();
  return cert;
}

inline VerifyOutcome verify_heisenberg_certificate(const HeisenbergCertificate& cert) {
  VerifyOutcome out;
  unsigned p = cert.set.p;
  auto group = std::make_shared<HeisenbergGroup>(p);
  // inverse closure, identity- and involution-freeness
  std::vector<elem_t> sorted = cert.set.all;
  elem_t involution = group->encode({0, 0, 0, 1});
  for (elem_t e : sorted) {
    if (e == 0 || e == involution) {
      out.ok = false;
      out.message = "generating set contains the identity or the central involution";
      return out;
    }
    if (!std::binary_search(sorted.begin(), sorted.end(), group->inv(e))) {
      out.ok = false;
      out.message = "generating set is not inverse-closed";
      return out;
    }
  }
  CayleyGraph<HeisenbergGroup> graph{group, sorted, false};
  out.report = diameter(graph);
  if (out.report.diameter != 3 || out.report.order != 2ull * p * p * p) {
    out.ok = false;
    out.message = "graph does not have diameter 3 at order 2p^3";
    return out;
  }
  if (out.report.order != cert.report.order || out.report.degree != cert.report.degree ||
      out.report.diameter != cert.report.diameter ||
      out.report.histogram != cert.report.histogram) {
    out.ok = false;
    out.message = "stored report does not match the recomputed one";
  }
  return out;
}

// ---------------------------------------------------------------------------

inline void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  require(out.good(), errc::invalid_input, "cannot open output file " + path);
  out << j.dump(2) << '\n';
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), errc::invalid_input, "cannot open input file " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace cayley
