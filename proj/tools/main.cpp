#include <CLI11.hpp>
#include <functional>
#include <iostream>
#include <map>

#include "commands.hpp"

namespace {

constexpr const char* kGrammar = R"(Grammars:
  word     letters separated by spaces: s<i> (sigma_i), S<i> (sigma_i inverse),
           z<i> (zeta_i), 1 <= i < strands; the rightmost letter acts first;
           the empty string is the identity
  tuple    comma-separated elements; finite carriers are 1-indexed,
           cyclic-rack takes integers, conj-free<n>/vconj<n> take words such as
           x1 x2^-1 x1, free shelves take terms such as (x1*x2)*x3 where a
           bare x means x0
  cut      ones | counit | comma-separated integers, one per basis element
  diff     integer combination of ed and de, e.g. ed-de, 2*ed+3*de
Exit status: 0 success, 1 domain error (JSON error on stdout), 2 usage error.)";

void print(const vbraid::cli::Output& out, const std::string& format) {
  if (format == "table") std::cout << out.table;
  else std::cout << out.json.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace vbraid::cli;
  CLI::App app{"Virtual braids, self-distributive structures and their homology"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", o.seed, "Seed for sampled probes");

  std::map<CLI::App*, std::function<Output(const Options&)>> run;
  auto sub = [&](const char* name, const char* help, Output (*fn)(const Options&)) {
    CLI::App* s = app.add_subcommand(name, help);
    run[s] = fn;
    return s;
  };
  auto structure = [&](CLI::App* s) {
    s->add_option("--structure", o.structure, "Builtin name or JSON file")->required();
  };
  auto budget = [&](CLI::App* s) {
    s->add_option("--depth", o.depth, "Rewrite depth budget for free shelves");
    s->add_option("--max-visited", o.max_visited, "Visited-term budget for free shelves");
  };

  auto* vr = sub("validate-rack", "Check a rack table and report its class", validate_rack);
  vr->add_option("structure", o.structure, "Rack table JSON file or builtin name")->required();

  auto* cl = sub("classify", "Classify a finite table as shelf, rack or quandle", classify);
  structure(cl);

  auto* ac = sub("act", "Apply a word to a tuple", act);
  structure(ac);
  budget(ac);
  ac->add_option("--word", o.word, "Virtual braid word")->required();
  ac->add_option("--tuple", o.tuple, "Comma-separated tuple")->required();
  ac->add_option("--strands", o.strands, "Strand count (default: tuple length)");

  auto* iv = sub("invariants", "Forgetful permutation and crossing data of a word", invariants);
  iv->add_option("--word", o.word, "Virtual braid word")->required();
  iv->add_option("--strands", o.strands, "Strand count")->required();

  auto* di = sub("distinguish", "Compare the actions of two words on probe tuples", distinguish);
  structure(di);
  budget(di);
  di->add_option("--w1", o.w1, "First word")->required();
  di->add_option("--w2", o.w2, "Second word")->required();
  di->add_option("--strands", o.strands, "Strand count")->required();

  auto* sc = sub("scan", "Search for pairs of short words with equal actions", scan);
  structure(sc);
  budget(sc);
  sc->add_option("--strands", o.strands, "Strand count")->required();
  sc->add_option("--max-len", o.max_len, "Maximum word length");
  sc->add_flag("--positive", o.positive, "Only positive words");
  sc->add_flag("--all-words", o.all_words, "Include words that are not freely reduced");

  auto* rh = sub("rho", "Matrix of a word in a linear braided object", rho);
  rh->add_option("--object", o.object, "Builtin object or JSON file")->required();
  rh->add_option("--word", o.word, "Virtual braid word")->required();
  rh->add_option("--strands", o.strands, "Strand count")->required();

  auto* yb = sub("yb-check", "Check the braid relations of a linear braided object", yb_check);
  yb->add_option("--object", o.object, "Builtin object or JSON file")->required();

  auto* tw = sub("twist", "Twist a linear braided object by its automorphism", twist);
  tw->add_option("--object", o.object, "Builtin object or JSON file")->required();

  auto* gv = sub("gsd-validate", "Report each axiom of a structure", gsd_validate);
  gv->add_option("structure", o.structure, "GSD JSON file or builtin name")->required();

  auto* ho = sub("homology", "Homology of the complex built from a structure and a cut", homology);
  structure(ho);
  ho->add_option("--cut", o.cut, "Cut covector");
  ho->add_option("--diff", o.diff, "Differential combination");
  ho->add_option("--max-degree", o.max_degree, "Highest degree reported");
  ho->add_flag("--normalized", o.normalized, "Quotient by degenerate chains");

  auto* en = sub("enumerate", "List words up to a length", enumerate);
  en->add_option("--strands", o.strands, "Strand count")->required();
  en->add_option("--max-len", o.max_len, "Maximum word length");
  en->add_flag("--positive", o.positive, "Only positive words");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  try {
    print(run.at(chosen)(o), format);
  } catch (const vbraid::DomainError& e) {
    vbraid::Json err{{"error", {{"type", "DomainError"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }
  return 0;
}
