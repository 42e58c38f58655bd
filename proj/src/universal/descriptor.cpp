#include "graphon/universal/descriptor.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "graphon/errors.hpp"
#include "graphon/step_io.hpp"
#include "graphon/universal/iterated.hpp"

namespace graphon {

namespace {

constexpr unsigned kDefaultCheckerCap = 20;

unsigned checker_cap(const std::string& spec) {
  if (spec == "checker") return kDefaultCheckerCap;
  const std::string digits = spec.substr(8);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError("bad checker spec '" + spec + "'");
  return static_cast<unsigned>(std::stoul(digits));
}

bool is_checker(const std::string& spec) {
  return spec == "checker" || spec.rfind("checker:", 0) == 0;
}

Rational constant_of(const std::string& spec) {
  const Rational p = parse_rational(spec.substr(6));
  if (p < 0 || p > 1) throw ValidationError("constant must lie in [0, 1]");
  return p;
}

}  // namespace

GraphonPtr resolve_wf(const std::string& spec) {
  if (spec == "zero") return make_constant(0.0);
  if (spec == "one") return make_constant(1.0);
  if (spec == "half") return make_half();
  if (spec.rfind("const:", 0) == 0) return make_constant(to_double(constant_of(spec)));
  if (is_checker(spec)) return std::make_shared<CheckerGraphon>(0, checker_cap(spec));
  return make_step(load_step_graphon(spec));
}

ExactStepGraphon resolve_exact_wf(const std::string& spec) {
  if (spec == "zero") return ExactStepGraphon::constant(Rational(0));
  if (spec == "one") return ExactStepGraphon::constant(Rational(1));
  if (spec == "half") throw ValidationError("the half graphon is not a step graphon");
  if (spec.rfind("const:", 0) == 0) return ExactStepGraphon::constant(constant_of(spec));
  if (is_checker(spec)) return to_exact_graphon(checker_step(0, checker_cap(spec)));
  return load_exact_step_graphon(spec);
}

UniversalDescriptor read_descriptor(std::istream& in) {
  UniversalDescriptor desc;
  std::string line;
  std::size_t number = 0;
  bool header = false;
  bool have_wf = false;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string key;
    if (!(words >> key)) continue;
    auto fail = [&](const std::string& what) { throw ParseError(what, number, 1); };
    if (!header) {
      std::string version;
      if (key != "universal" || !(words >> version) || version != "1")
        fail("expected 'universal 1'");
      header = true;
      continue;
    }
    if (key == "wf") {
      if (!(words >> desc.wf)) fail("wf needs a spec");
      have_wf = true;
    } else if (key == "depth") {
      if (!(words >> desc.options.depth)) fail("depth needs an integer");
    } else if (key == "bits") {
      if (!(words >> desc.options.bits)) fail("bits needs an integer");
    } else if (key == "resolution") {
      if (!(words >> desc.options.resolution)) fail("resolution needs an integer");
    } else if (key == "exact") {
      desc.exact = true;
    } else if (key == "order") {
      std::string name;
      desc.options.order.clear();
      while (words >> name) {
        const auto part = parse_part(name);
        if (!part) fail("unknown part '" + name + "'");
        desc.options.order.push_back(*part);
      }
    } else if (key == "bitstream") {
      std::string bits;
      words >> bits;
      try {
        desc.bitstream = BitStream::parse(bits);
      } catch (const ValidationError& e) {
        fail(e.what());
      }
    } else {
      fail("unknown key '" + key + "'");
    }
    std::string extra;
    if (words >> extra) fail("unexpected token '" + extra + "'");
  }
  if (!header) throw ParseError("empty descriptor", number, 1);
  if (!have_wf) throw ParseError("descriptor has no wf line", number, 1);
  return desc;
}

UniversalDescriptor load_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  UniversalDescriptor desc = read_descriptor(in);
  namespace fs = std::filesystem;
  const bool builtin = desc.wf == "zero" || desc.wf == "one" || desc.wf == "half" ||
                       desc.wf.rfind("const:", 0) == 0 || is_checker(desc.wf);
  if (!builtin && fs::path(desc.wf).is_relative()) {
    const fs::path local = fs::path(path).parent_path() / desc.wf;
    if (fs::exists(local)) desc.wf = local.string();
  }
  return desc;
}

void write_descriptor(std::ostream& out, const UniversalDescriptor& desc) {
  out << "universal 1\n";
  out << "wf " << desc.wf << "\n";
  out << "depth " << desc.options.depth << "\n";
  out << "bits " << desc.options.bits << "\n";
  if (desc.options.resolution != UniversalOptions{}.resolution)
    out << "resolution " << desc.options.resolution << "\n";
  if (!desc.options.order.empty()) {
    out << "order";
    for (Part p : desc.options.order) out << ' ' << part_name(p);
    out << "\n";
  }
  if (desc.exact) out << "exact\n";
  if (desc.bitstream) out << "bitstream " << desc.bitstream->to_string() << "\n";
}

UniversalGraphon build_from_descriptor(const UniversalDescriptor& desc) {
  UniversalGraphon w0 = desc.exact ? build_universal(resolve_exact_wf(desc.wf), desc.options)
                                   : build_universal(resolve_wf(desc.wf), desc.options);
  if (desc.bitstream && !(*desc.bitstream == w0.bits()))
    throw ValidationError("recorded bit stream does not match the rebuilt encoding");
  return w0;
}

}  // namespace graphon
