#include "inputs.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>

#include <gammaspace/io.hpp>
#include <gammaspace/simpset_ops.hpp>
#include <gammaspace/suite.hpp>

namespace gs::cli {

namespace {

bool is_builtin(const std::string& s) {
  static const char* prefixes[] = {"corpus:", "simplex:", "boundary:", "horn:", "nerve:", "representable:"};
  if (s == "point" || s == "circle" || s == "S0") return true;
  return std::any_of(std::begin(prefixes), std::end(prefixes), [&](const char* p) { return s.starts_with(p); });
}

std::string after(const std::string& s, const std::string& prefix) { return s.substr(prefix.size()); }

int parse_int(const std::string& text) {
  int v = 0;
  const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size()) throw InputError("not an integer: '" + text + "'");
  return v;
}

std::vector<int> split_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    out.push_back(parse_int(text.substr(start, end - start)));
    start = end + 1;
  }
  return out;
}

SimpSet circle(int dim_bound) {
  std::vector<std::vector<Cell>> cells(dim_bound + 1);
  cells[0] = {{"v", {}}};
  if (dim_bound >= 1) cells[1] = {{"e", {{0, {}}, {0, {}}}}};
  return SimpSet(dim_bound, cells);
}

FinCat corpus_category(const std::string& name) {
  for (auto& c : suite::category_corpus())
    if (c.name == name) return c.cat;
  throw InputError("unknown corpus category '" + name + "'");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  if (text.empty()) return {};
  return split_ints(text, ',');
}

json InputResolver::load(const std::string& operand) { return io::read_file(operand); }

void InputResolver::record(const std::string& operand, const json& canonical) {
  seen_.push_back(is_builtin(operand) ? "builtin:" + operand : canonical.dump());
}

std::string InputResolver::digest() const {
  std::string all;
  for (const auto& s : seen_) {
    all += s;
    all += '\n';
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(all.data(), all.size(), md, &len, EVP_sha256(), nullptr) != 1) return {};
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return "sha256:" + hex;
}

SimpSet InputResolver::simpset(const std::string& operand) {
  const int d = cfg_.dim_bound;
  SimpSet out;
  if (operand == "point") {
    out = point(d);
  } else if (operand == "circle") {
    out = circle(d);
  } else if (operand == "S0") {
    out = sphere0(d);
  } else if (operand.starts_with("simplex:")) {
    out = standard_simplex(parse_int(after(operand, "simplex:")), d);
  } else if (operand.starts_with("boundary:")) {
    out = boundary(parse_int(after(operand, "boundary:")), d);
  } else if (operand.starts_with("horn:")) {
    const auto nk = split_ints(after(operand, "horn:"), ':');
    if (nk.size() != 2) throw InputError("horn:n:k expected");
    out = horn(nk[0], nk[1], d);
  } else if (operand.starts_with("nerve:")) {
    out = nerve(corpus_category(after(operand, "nerve:")), d);
  } else if (operand.starts_with("corpus:")) {
    const std::string name = after(operand, "corpus:");
    bool found = false;
    for (auto& x : suite::pointed_corpus(d))
      if (x.name == name) {
        out = x.set;
        found = true;
      }
    if (!found) throw InputError("unknown corpus simplicial set '" + name + "'");
  } else {
    out = io::simpset_from_json(load(operand));
  }
  record(operand, io::to_json(out));
  return out;
}

MarkedSimpSet InputResolver::marked(const std::string& operand) {
  // Built-in operands take the minimal marking.
  if (is_builtin(operand)) return flat(simpset(operand));
  MarkedSimpSet out = io::marked_from_json(load(operand));
  record(operand, io::to_json(out));
  return out;
}

FinCat InputResolver::category(const std::string& operand) {
  FinCat out = operand.starts_with("corpus:") ? corpus_category(after(operand, "corpus:"))
                                              : io::category_from_json(load(operand));
  record(operand, io::to_json(out));
  return out;
}

PresentedGammaSpace InputResolver::presented(const std::string& operand) {
  PresentedGammaSpace out;
  if (operand.starts_with("representable:")) {
    out = representable(parse_int(after(operand, "representable:")), cfg_.dim_bound);
  } else if (operand.starts_with("corpus:")) {
    const std::string name = after(operand, "corpus:");
    bool found = false;
    for (auto& x : suite::presented_corpus(std::min(cfg_.dim_bound, 2)))
      if (x.name == name) {
        out = x.space;
        found = true;
      }
    if (!found) throw InputError("unknown presented corpus space '" + name + "'");
  } else {
    const json j = load(operand);
    if (!j.contains("cells") || !j.contains("glue")) throw InputError("'" + operand + "' is not a presented Gamma-space");
    out = io::presented_from_json(j);
  }
  record(operand, io::to_json(out));
  return out;
}

TabulatedGammaSpace InputResolver::tabulated(const std::string& operand) {
  const int n = cfg_.level_bound;
  if (operand.starts_with("corpus:")) {
    const std::string name = after(operand, "corpus:");
    for (auto& x : suite::tabulated_corpus(n, std::min(cfg_.dim_bound, 2)))
      if (x.name == name) {
        record(operand, {});
        return x.space;
      }
    return tabulate(presented(operand), n);
  }
  if (operand.starts_with("representable:")) return tabulate(presented(operand), n);
  const json j = load(operand);
  if (j.contains("cells") && j.contains("glue")) {
    const PresentedGammaSpace p = io::presented_from_json(j);
    record(operand, io::to_json(p));
    return tabulate(p, n);
  }
  TabulatedGammaSpace out = io::tabulated_from_json(j);
  record(operand, io::to_json(out));
  return out;
}

RelativeNerveInput InputResolver::diagram(const std::string& operand) {
  if (operand.starts_with("corpus:")) {
    const std::string name = after(operand, "corpus:");
    for (auto& d : suite::diagram_corpus())
      if (d.name == name) {
        record(operand, {});
        return d.input;
      }
    throw InputError("unknown corpus diagram '" + name + "'");
  }
  RelativeNerveInput out = io::relative_nerve_input_from_json(load(operand));
  record(operand, io::to_json(out));
  return out;
}

SimpMap InputResolver::mono(const std::string& operand) {
  const int d = cfg_.dim_bound;
  SimpMap out;
  if (operand.starts_with("boundary:")) {
    out = boundary_inclusion(parse_int(after(operand, "boundary:")), d);
  } else if (operand.starts_with("horn:")) {
    const auto nk = split_ints(after(operand, "horn:"), ':');
    if (nk.size() != 2) throw InputError("horn:n:k expected");
    out = horn_inclusion(nk[0], nk[1], d);
  } else {
    const json j = load(operand);
    const auto field = [&](const char* key) -> const json& {
      if (!j.contains(key)) throw InputError("map file needs '" + std::string(key) + "'");
      return j.at(key);
    };
    const SimpSet src = io::simpset_from_json(field("source"));
    const SimpSet tgt = io::simpset_from_json(field("target"));
    out = io::simpmap_from_json(field("map"), src, tgt);
  }
  if (!out.is_mono()) throw InputError("'" + operand + "' is not a monomorphism");
  record(operand, json{{"source", io::to_json(out.source())}, {"target", io::to_json(out.target())}, {"map", io::to_json(out)}});
  return out;
}

OverObject InputResolver::over_object(const std::string& operand, const SimpSet& base_nerve) {
  OverObject out = io::over_object_from_json(load(operand), base_nerve);
  record(operand, io::to_json(out));
  return out;
}

}  // namespace gs::cli
