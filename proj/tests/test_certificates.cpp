#include <catch2/catch_amalgamated.hpp>

#include "cayley/certificates.hpp"
#include "cayley/exemplars.hpp"

using namespace cayley;

TEST_CASE("semidirect certificates round-trip byte-identically") {
  auto result = build_certificate(sym4_diameter4_spec());
  const Certificate& cert = std::get<Certificate>(result);

  json j = certificate_to_json(cert);
  std::string bytes = j.dump(2);

  Certificate reloaded = certificate_from_json(json::parse(bytes));
  std::string bytes2 = certificate_to_json(reloaded).dump(2);
  CHECK(bytes == bytes2);

  VerifyOptions opts;
  opts.replay_samples = 10;
  auto outcome = verify_certificate(reloaded, 2, opts);
  INFO(outcome.message);
  CHECK(outcome.ok);
}

TEST_CASE("rebuilding the same certificate twice is deterministic") {
  auto a = build_certificate(cyclic36_diameter6_spec());
  auto b = build_certificate(cyclic36_diameter6_spec());
  CHECK(certificate_to_json(std::get<Certificate>(a)).dump(2) ==
        certificate_to_json(std::get<Certificate>(b)).dump(2));
}

TEST_CASE("tampered certificates fail verification with the element named") {
  auto result = build_certificate(sym4_diameter4_spec());
  Certificate cert = std::get<Certificate>(result);
  json j = certificate_to_json(cert);
  j["solutions"][3]["M_inverse"][0][0] = j["solutions"][3]["M_inverse"][0][0].get<long long>() + 1;
  Certificate tampered = certificate_from_json(j);
  auto outcome = verify_certificate(tampered, 2);
  CHECK_FALSE(outcome.ok);
  CHECK(outcome.message.find("element 3") != std::string::npos);
}

TEST_CASE("dihedral certificates") {
  GoodStringTable table = coverage_table(7);
  json j = dihedral_certificate_to_json(table, {2});
  DihedralCertificate cert = dihedral_certificate_from_json(j);
  CHECK(dihedral_certificate_to_json(cert.table, cert.verified_m).dump(2) == j.dump(2));

  auto outcome = verify_dihedral_certificate(cert, 2);
  INFO(outcome.message);
  CHECK(outcome.ok);
  CHECK(outcome.report.order == 1792);

  // corrupt one string
  json bad = j;
  bad["table"][3]["string"] = "rrrrrrr";
  auto broken = dihedral_certificate_from_json(bad);
  CHECK_FALSE(verify_dihedral_certificate(broken, 2).ok);
}

TEST_CASE("heisenberg certificates") {
  HeisGenset set = diameter3_genset(5);
  auto group = std::make_shared<HeisenbergGroup>(5);
  auto report = diameter(CayleyGraph<HeisenbergGroup>{group, set.all, false});
  json j = heisenberg_certificate_to_json(set, report);

  HeisenbergCertificate cert = heisenberg_certificate_from_json(j);
  CHECK(heisenberg_certificate_to_json(cert.set, cert.report).dump(2) == j.dump(2));
  auto outcome = verify_heisenberg_certificate(cert);
  INFO(outcome.message);
  CHECK(outcome.ok);

  // drop one generator: no longer inverse-closed or no longer diameter 3
  json bad = j;
  bad["S1"].erase(0);
  auto broken = heisenberg_certificate_from_json(bad);
  CHECK_FALSE(verify_heisenberg_certificate(broken).ok);
}
