#include "lefschetz/instance.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "lefschetz/matrix.hpp"

namespace lefschetz {

using nlohmann::json;

Instance::Instance(int m, int d, const FieldSpec& field, std::vector<Poly> generators)
    : m_(m), d_(d), field_(field), gens_(std::move(generators)) {
  validate();
}

void Instance::validate() const {
  if (m_ < 1) throw malformed_input("need m >= 1");
  if (d_ < 2) throw malformed_input("need degree d >= 2");
  if (static_cast<int>(gens_.size()) != m_ + 1)
    throw presentation_error("expected exactly m+1 generators");
  if (field_.is_prime() && field_.p() <= static_cast<std::uint64_t>(socle_degree()))
    throw malformed_input("prime modulus must exceed the socle degree (m+1)(d-1)");
  for (const Poly& g : gens_) {
    if (g.nvars() != m_ + 1) throw presentation_error("generator variable count mismatch");
    if (g.degree() != d_) throw presentation_error("generator degree mismatch");
    if (g.side() != Side::op) throw presentation_error("generators must be operator-side");
    if (g.field() != field_) throw malformed_input("generator field mismatch");
  }
  MonomialIndexer basis(m_ + 1, d_);
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(gens_.size());
  for (const Poly& g : gens_) rows.push_back(g.dense(basis));
  if (Matrix::from_rows(field_, rows).rank() != m_ + 1)
    throw presentation_error("generators are linearly dependent");
}

bool Instance::operator==(const Instance& o) const {
  return m_ == o.m_ && d_ == o.d_ && field_ == o.field_ && gens_ == o.gens_;
}

std::string Instance::serialize() const {
  json j;
  j["m"] = m_;
  j["d"] = d_;
  j["field"]["kind"] = field_.is_prime() ? "prime" : "rational";
  if (field_.is_prime()) j["field"]["p"] = field_.p();
  json gens = json::array();
  for (const Poly& g : gens_) {
    json terms = json::array();
    for (const auto& [mono, coef] : g.terms()) {
      json t;
      t["exps"] = mono.exps;
      t["coef"] = coef.to_string();
      terms.push_back(t);
    }
    gens.push_back(terms);
  }
  j["generators"] = gens;
  return j.dump(2) + "\n";
}

Instance Instance::parse_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw malformed_input(std::string("bad instance file: ") + e.what());
  }
  try {
    int m = j.at("m").get<int>();
    int d = j.at("d").get<int>();
    const json& jf = j.at("field");
    std::string kind = jf.at("kind").get<std::string>();
    FieldSpec field = kind == "prime"     ? FieldSpec::prime(jf.at("p").get<std::uint64_t>())
                      : kind == "rational" ? FieldSpec::rational()
                                           : throw malformed_input("unknown field kind " + kind);
    std::vector<Poly> gens;
    for (const json& jg : j.at("generators")) {
      Poly g(field, m + 1, d, Side::op);
      for (const json& jt : jg) {
        std::vector<int> exps = jt.at("exps").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != m + 1)
          throw malformed_input("term exponent length mismatch");
        g.add_term(Monomial(exps), Scalar::parse(field, jt.at("coef").get<std::string>()));
      }
      gens.push_back(std::move(g));
    }
    return Instance(m, d, field, std::move(gens));
  } catch (const json::exception& e) {
    throw malformed_input(std::string("bad instance file: ") + e.what());
  }
}

Instance Instance::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_input("cannot open instance file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

void Instance::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw malformed_input("cannot write instance file " + path);
  out << serialize();
}

std::string Instance::digest() const {
  std::uint64_t h = fnv1a64(serialize());
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Instance monomial_instance(int m, int d, const FieldSpec& field) {
  std::vector<Poly> gens;
  for (int i = 0; i <= m; ++i) {
    Monomial mono(std::vector<int>(m + 1, 0));
    mono.exps[i] = d;
    gens.push_back(Poly::monomial_term(field, Side::op, mono, Scalar::one(field)));
  }
  return Instance(m, d, field, std::move(gens));
}

Instance random_instance(int m, int d, const FieldSpec& field, Rng& rng) {
  for (;;) {
    std::vector<Poly> gens;
    for (int i = 0; i <= m; ++i) gens.push_back(random_poly(field, m + 1, d, Side::op, rng));
    try {
      return Instance(m, d, field, std::move(gens));
    } catch (const presentation_error&) {
      // dependent draw; resample
    }
  }
}

}  // namespace lefschetz
