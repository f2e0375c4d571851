// Copyright 2026 The cqbox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "cqbox/cli/document.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <openssl/sha.h>

namespace cqbox::cli {
namespace {

Json complex_json(Complex c) { return Json::array({c.real(), c.imag()}); }

// Location-aware field access for structural validation.
class Reader {
 public:
  Reader(const Json& j, std::string path) : j_(j), path_(std::move(path)) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw DocumentError("field " + (path_.empty() ? std::string("<root>") : path_) + ": " + what);
  }
  const Json& json() const { return j_; }

  Reader at(const std::string& key) const {
    if (!j_.is_object()) fail("expected an object");
    const auto it = j_.find(key);
    if (it == j_.end()) Reader(j_, join(key)).fail("missing");
    return Reader(*it, join(key));
  }
  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

  Reader at(std::size_t i) const {
    if (!j_.is_array()) fail("expected an array");
    if (i >= j_.size()) fail("too few entries");
    return Reader(j_[i], path_ + "[" + std::to_string(i) + "]");
  }
  std::size_t size() const {
    if (!j_.is_array()) fail("expected an array");
    return j_.size();
  }
  void expect_size(std::size_t n) const {
    if (size() != n) fail("expected " + std::to_string(n) + " entries, found " + std::to_string(size()));
  }

  double number() const {
    if (!j_.is_number()) fail("expected a number");
    return j_.get<double>();
  }
  int integer() const {
    if (!j_.is_number_integer()) fail("expected an integer");
    return j_.get<int>();
  }
  std::string string() const {
    if (!j_.is_string()) fail("expected a string");
    return j_.get<std::string>();
  }
  Complex complex() const {
    expect_size(2);
    return {at(0).number(), at(1).number()};
  }
  std::vector<int> positive_ints() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < size(); ++i) {
      const int v = at(i).integer();
      if (v < 1) at(i).fail("must be positive");
      out.push_back(v);
    }
    if (out.empty()) fail("must not be empty");
    return out;
  }

 private:
  std::string join(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

  const Json& j_;
  std::string path_;
};

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    const auto last_nl = text.substr(0, upto).rfind('\n');
    const auto column = last_nl == std::string_view::npos ? upto + 1 : upto - last_nl;
    throw DocumentError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": malformed JSON (" + e.what() + ")");
  }
}

void check_header(const Reader& r, const std::string& format) {
  if (r.at("format").string() != format) r.at("format").fail("expected \"" + format + "\"");
  if (r.at("version").integer() != kFormatVersion) r.at("version").fail("unsupported version");
}

Json metadata_json(const BoxMetadata& meta) {
  Json m;
  m["label"] = meta.label;
  m["seed"] = meta.seed ? Json(*meta.seed) : Json(nullptr);
  m["tolerance"] = meta.tolerance;
  return m;
}

BoxMetadata read_metadata(const Reader& r) {
  BoxMetadata meta;
  if (!r.has("metadata")) return meta;
  const Reader m = r.at("metadata");
  if (m.has("label")) meta.label = m.at("label").string();
  if (m.has("seed") && !m.at("seed").json().is_null()) {
    if (!m.at("seed").json().is_number_unsigned()) m.at("seed").fail("expected a nonnegative integer");
    meta.seed = m.at("seed").json().get<std::uint64_t>();
  }
  if (m.has("tolerance")) {
    meta.tolerance = m.at("tolerance").number();
    if (!(meta.tolerance > 0.0)) m.at("tolerance").fail("must be positive");
  }
  return meta;
}

CCBox read_cc(const Reader& r, double tol) {
  const auto inputs = r.at("inputs").positive_ints();
  const auto outputs = r.at("outputs").positive_ints();
  if (inputs.size() != outputs.size()) r.at("outputs").fail("one alphabet per party is required");
  std::size_t in_count = 1, out_count = 1;
  for (int v : inputs) in_count *= static_cast<std::size_t>(v);
  for (int v : outputs) out_count *= static_cast<std::size_t>(v);
  const Reader table = r.at("payload").at("table");
  table.expect_size(in_count);
  std::vector<double> flat;
  for (std::size_t i = 0; i < in_count; ++i) {
    const Reader row = table.at(i);
    row.expect_size(out_count);
    for (std::size_t o = 0; o < out_count; ++o) flat.push_back(row.at(o).number());
  }
  try {
    return CCBox(inputs, outputs, std::move(flat), tol);
  } catch (const Error& e) {
    table.fail(e.what());
  }
}

CQBox read_cq(const Reader& r, double tol) {
  const Reader parties = r.at("parties");
  std::vector<Party> list;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    const Reader p = parties.at(i);
    const int dim = p.at("dim").integer();
    if (dim < 1) p.at("dim").fail("must be positive");
    list.push_back({p.at("label").string(), dim});
  }
  PartyStructure structure;
  try {
    structure = PartyStructure(list);
  } catch (const Error& e) {
    parties.fail(e.what());
  }
  const auto inputs = r.at("inputs").positive_ints();
  if (inputs.size() != structure.size()) r.at("inputs").fail("one alphabet per party is required");
  std::size_t in_count = 1;
  for (int v : inputs) in_count *= static_cast<std::size_t>(v);
  const auto dim = static_cast<Eigen::Index>(structure.total_dim());

  const Reader payload = r.at("payload");
  const std::string encoding = payload.at("encoding").string();
  const Reader states = payload.at("states");
  states.expect_size(in_count);
  if (encoding == "pure") {
    std::vector<StateVector> outs;
    for (std::size_t i = 0; i < in_count; ++i) {
      const Reader s = states.at(i);
      s.expect_size(static_cast<std::size_t>(dim));
      ComplexVector v(dim);
      for (Eigen::Index k = 0; k < dim; ++k) v(k) = s.at(static_cast<std::size_t>(k)).complex();
      try {
        outs.emplace_back(v, structure, tol);
      } catch (const Error& e) {
        s.fail(e.what());
      }
    }
    return CQBox(structure, inputs, std::move(outs));
  }
  if (encoding == "density") {
    std::vector<DensityMatrix> outs;
    for (std::size_t i = 0; i < in_count; ++i) {
      const Reader s = states.at(i);
      s.expect_size(static_cast<std::size_t>(dim));
      ComplexMatrix m(dim, dim);
      for (Eigen::Index a = 0; a < dim; ++a) {
        const Reader row = s.at(static_cast<std::size_t>(a));
        row.expect_size(static_cast<std::size_t>(dim));
        for (Eigen::Index b = 0; b < dim; ++b) m(a, b) = row.at(static_cast<std::size_t>(b)).complex();
      }
      try {
        outs.emplace_back(m, structure, tol);
      } catch (const Error& e) {
        s.fail(e.what());
      }
    }
    return CQBox(structure, inputs, std::move(outs));
  }
  payload.at("encoding").fail("expected \"pure\" or \"density\"");
}

}  // namespace

Json to_json(const CCBox& box, const BoxMetadata& meta) {
  Json j;
  j["format"] = "cqbox-box";
  j["version"] = kFormatVersion;
  j["kind"] = "cc";
  j["inputs"] = box.inputs().radices();
  j["outputs"] = box.outputs().radices();
  Json table = Json::array();
  for (std::size_t i = 0; i < box.inputs().size(); ++i) {
    const auto d = box.distribution(i);
    table.push_back(std::vector<double>(d.begin(), d.end()));
  }
  j["payload"] = {{"table", std::move(table)}};
  j["metadata"] = metadata_json(meta);
  return j;
}

Json to_json(const CQBox& box, const BoxMetadata& meta) {
  Json j;
  j["format"] = "cqbox-box";
  j["version"] = kFormatVersion;
  j["kind"] = "cq";
  Json parties = Json::array();
  for (const auto& p : box.structure().parties()) parties.push_back({{"label", p.label}, {"dim", p.dim}});
  j["parties"] = std::move(parties);
  j["inputs"] = box.inputs().radices();
  Json states = Json::array();
  if (box.is_pure()) {
    for (std::size_t i = 0; i < box.size(); ++i) {
      const ComplexVector v = box.pure_output(i)->amplitudes();
      Json s = Json::array();
      for (Eigen::Index k = 0; k < v.size(); ++k) s.push_back(complex_json(v(k)));
      states.push_back(std::move(s));
    }
  } else {
    for (std::size_t i = 0; i < box.size(); ++i) {
      const ComplexMatrix& m = box.output(i).matrix();
      Json rows = Json::array();
      for (Eigen::Index a = 0; a < m.rows(); ++a) {
        Json row = Json::array();
        for (Eigen::Index b = 0; b < m.cols(); ++b) row.push_back(complex_json(m(a, b)));
        rows.push_back(std::move(row));
      }
      states.push_back(std::move(rows));
    }
  }
  j["payload"] = {{"encoding", box.is_pure() ? "pure" : "density"}, {"states", std::move(states)}};
  j["metadata"] = metadata_json(meta);
  return j;
}

Json to_json(const BoxDocument& doc) {
  return std::visit([&](const auto& box) { return to_json(box, doc.metadata); }, doc.box);
}

BoxDocument box_document_from_json(const Json& j) {
  const Reader r(j, "");
  if (!j.is_object()) r.fail("expected an object");
  check_header(r, "cqbox-box");
  BoxMetadata meta = read_metadata(r);
  const std::string kind = r.at("kind").string();
  if (kind == "cc") return {read_cc(r, meta.tolerance), std::move(meta)};
  if (kind == "cq") return {read_cq(r, meta.tolerance), std::move(meta)};
  r.at("kind").fail("expected \"cc\" or \"cq\"");
}

BoxDocument parse_box_document(std::string_view text) { return box_document_from_json(parse_text(text)); }

Json to_json(const PhaseAssignment& p) {
  Json j;
  j["format"] = "cqbox-wphase";
  j["version"] = kFormatVersion;
  j["alpha"] = p.alpha;
  j["beta"] = p.beta;
  j["gamma"] = p.gamma;
  return j;
}

PhaseAssignment parse_phase_assignment(std::string_view text) {
  const Json j = parse_text(text);
  const Reader r(j, "");
  if (!j.is_object()) r.fail("expected an object");
  check_header(r, "cqbox-wphase");
  PhaseAssignment p;
  const std::pair<const char*, std::array<double, 8>*> fields[] = {
      {"alpha", &p.alpha}, {"beta", &p.beta}, {"gamma", &p.gamma}};
  for (const auto& [key, target] : fields) {
    const Reader f = r.at(key);
    f.expect_size(8);
    for (std::size_t i = 0; i < 8; ++i) (*target)[i] = f.at(i).number();
  }
  return p;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DocumentError("cannot write " + path.string());
  out << contents;
  if (!out) throw DocumentError("write failed for " + path.string());
}

std::string digest(std::string_view bytes) {
  unsigned char md[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size(), md);
  std::string hex;
  hex.reserve(2 * SHA256_DIGEST_LENGTH);
  constexpr char kDigits[] = "0123456789abcdef";
  for (unsigned char c : md) {
    hex.push_back(kDigits[c >> 4]);
    hex.push_back(kDigits[c & 15]);
  }
  return hex;
}

}  // namespace cqbox::cli
