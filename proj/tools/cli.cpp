#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "bruhatcube/bruhat.hpp"
#include "bruhatcube/dwd.hpp"
#include "bruhatcube/embedding.hpp"
#include "bruhatcube/errors.hpp"
#include "bruhatcube/kl.hpp"
#include "bruhatcube/parallel.hpp"
#include "bruhatcube/search.hpp"
#include "bruhatcube/serialize.hpp"
#include "bruhatcube/tadic.hpp"

namespace bruhatcube::cli {
namespace {

struct Options {
  std::string format = "text";
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t budget = 10000;
  bool force = false;
  double tol = 1e-9;
  std::string out_path;
  std::ostream* err = &std::cerr;
};

// Collects one command's output; exactly one of the three renderings is printed.
class Printer {
 public:
  explicit Printer(const Options& opt) : opt_(opt) {}

  void emit(const std::string& text, const Json& json, const std::optional<std::string>& csv = std::nullopt) {
    if (opt_.format == "json")
      buffer_ << json.dump(2) << '\n';
    else if (opt_.format == "csv" && csv)
      buffer_ << *csv;
    else
      buffer_ << text;
  }
  std::string str() const { return buffer_.str(); }

 private:
  const Options& opt_;
  std::ostringstream buffer_;
};

std::string line(const std::string& s) { return s + '\n'; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

Permutation read_perm(const std::string& text) { return parse_permutation(text); }

std::pair<Permutation, Permutation> read_pair(const std::string& a, const std::string& b) {
  Permutation x = read_perm(a);
  Permutation y = read_perm(b);
  if (x.size() != y.size())
    throw InputError("degree mismatch: " + std::to_string(x.size()) + " vs " + std::to_string(y.size()));
  return {std::move(x), std::move(y)};
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

using Action = std::function<int(Printer&)>;

struct Registry {
  CLI::App& app;
  Options& opt;
  Action* selected;
};

void add_permutation_commands(Registry& r) {
  {
    auto* sub = r.app.add_subcommand("len", "Coxeter length (number of inversions)");
    sub->fallthrough();
    auto p = std::make_shared<std::string>();
    sub->add_option("p", *p, "permutation, e.g. \"0 2 1 3\"")->required();
    Action* selected = r.selected;
    sub->callback([selected, p] {
      *selected = [p](Printer& out) {
        const Permutation q = read_perm(*p);
        const std::int64_t l = length(q);
        out.emit(line(std::to_string(l)), Json{{"permutation", to_string(q)}, {"length", l}});
        return kSuccess;
      };
    });
  }

  auto pair_command = [&r](const std::string& name, const std::string& help,
                           std::function<int(Printer&, const Permutation&, const Permutation&)> body) {
    auto* sub = r.app.add_subcommand(name, help);
    sub->fallthrough();
    auto a = std::make_shared<std::string>();
    auto b = std::make_shared<std::string>();
    sub->add_option("x", *a, "lower permutation")->required();
    sub->add_option("y", *b, "upper permutation")->required();
    Action* selected = r.selected;
    sub->callback([selected, a, b, body] {
      *selected = [a, b, body](Printer& out) {
        const auto [x, y] = read_pair(*a, *b);
        return body(out, x, y);
      };
    });
    return sub;
  };

  pair_command("leq", "Bruhat comparison x <= y", [](Printer& out, const Permutation& x, const Permutation& y) {
    const bool leq = bruhat_leq(x, y);
    out.emit(line(bool_text(leq)), Json{{"leq", leq}}, line(bool_text(leq)));
    return leq ? kSuccess : kNegative;
  });

  pair_command("interval", "Elements and Hasse diagram of [x, y]",
               [](Printer& out, const Permutation& x, const Permutation& y) {
                 const IntervalPoset iv = interval(x, y);
                 std::ostringstream text;
                 for (std::size_t i = 0; i < iv.elements.size(); ++i)
                   text << iv.rank[i] << '\t' << to_string(iv.elements[i]) << '\n';
                 std::ostringstream csv;
                 csv << "rank,element\n";
                 for (std::size_t i = 0; i < iv.elements.size(); ++i)
                   csv << iv.rank[i] << ',' << to_string(iv.elements[i]) << '\n';
                 out.emit(text.str(), to_json(iv), csv.str());
                 return kSuccess;
               });

  pair_command("boolean", "Is [x, y] a boolean lattice", [](Printer& out, const Permutation& x, const Permutation& y) {
    const auto rank = is_boolean_interval(x, y);
    Json j{{"boolean", rank.has_value()}};
    if (rank) j["rank"] = *rank;
    out.emit(line(rank ? "true " + std::to_string(*rank) : "false"), j);
    return rank ? kSuccess : kNegative;
  });

  pair_command("rpoly", "R-polynomial R_{x,y}(q)", [](Printer& out, const Permutation& x, const Permutation& y) {
    const IntPolynomial r = r_polynomial(x, y);
    out.emit(line(to_string(r)), to_json(r));
    return kSuccess;
  });

  pair_command("dinv", "d-invariant by the descent recursion", [](Printer& out, const Permutation& x, const Permutation& y) {
    const std::int64_t d = d_invariant(x, y);
    out.emit(line(std::to_string(d)), Json{{"d", d}});
    return kSuccess;
  });

  auto cap = std::make_shared<int>(16);
  auto* diamond = pair_command("dinv-diamond", "d-invariant by minimal diamond-closed edge sets",
                               [cap](Printer& out, const Permutation& x, const Permutation& y) {
                                 const std::int64_t d = d_via_diamond_closure(interval(x, y), *cap);
                                 out.emit(line(std::to_string(d)), Json{{"d", d}});
                                 return kSuccess;
                               });
  diamond->add_option("--cap", *cap, "maximum number of Hasse edges")->capture_default_str();
}

void add_dwd_commands(Registry& r) {
  {
    auto* sub = r.app.add_subcommand("dwd", "Is p dyadically well-distributed");
    sub->fallthrough();
    auto p = std::make_shared<std::string>();
    sub->add_option("p", *p, "permutation of degree 2^m")->required();
    Action* selected = r.selected;
    sub->callback([selected, p] {
      *selected = [p](Printer& out) {
        const bool ok = is_dwd(read_perm(*p));
        out.emit(line(bool_text(ok)), Json{{"dwd", ok}}, line(bool_text(ok)));
        return ok ? kSuccess : kNegative;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("gen-xy", "The bit-reversal pair x_m, y_m");
    sub->fallthrough();
    auto m = std::make_shared<int>(0);
    sub->add_option("--m", *m, "exponent, degree 2^m")->required()->check(CLI::Range(1, 20));
    Action* selected = r.selected;
    sub->callback([selected, m] {
      *selected = [m](Printer& out) {
        const Permutation x = gen_x(*m), y = gen_y(*m);
        out.emit(line(to_string(x)) + line(to_string(y)), Json{{"m", *m}, {"x", to_string(x)}, {"y", to_string(y)}},
                 "which,permutation\nx," + to_string(x) + "\ny," + to_string(y) + '\n');
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("phi-encode", "Hypercube coordinates of a dwd permutation");
    sub->fallthrough();
    auto p = std::make_shared<std::string>();
    sub->add_option("p", *p, "dwd permutation")->required();
    Action* selected = r.selected;
    sub->callback([selected, p] {
      *selected = [p](Printer& out) {
        const CubeCoordinates c = encode_phi(read_perm(*p));
        out.emit(line(to_string(c)), to_json(c));
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("phi-decode", "dwd permutation with the given coordinates");
    sub->fallthrough();
    auto m = std::make_shared<int>(0);
    auto bits = std::make_shared<std::string>();
    sub->add_option("--m", *m, "exponent")->required()->check(CLI::Range(1, 20));
    sub->add_option("bits", *bits, "bit string of length m 2^(m-1)")->required();
    Action* selected = r.selected;
    sub->callback([selected, m, bits] {
      *selected = [m, bits](Printer& out) {
        const Permutation p = decode_phi(parse_cube_coordinates(*m, *bits));
        out.emit(line(to_string(p)), Json{{"permutation", to_string(p)}});
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("flip", "Apply the flip at a complementary block");
    sub->fallthrough();
    auto p = std::make_shared<std::string>();
    auto block = std::make_shared<std::size_t>(0);
    sub->add_option("p", *p, "dwd permutation")->required();
    sub->add_option("--block", *block, "block index in canonical order")->required();
    Action* selected = r.selected;
    sub->callback([selected, p, block] {
      *selected = [p, block](Printer& out) {
        const Permutation q = read_perm(*p);
        const int m = log2_exact(q.size());
        if (m < 1) throw InputError("degree must be a power of two >= 2");
        const auto blocks = complementary_blocks(m);
        if (*block >= blocks.size())
          throw InputError("block index " + std::to_string(*block) + " out of range (" +
                           std::to_string(blocks.size()) + " blocks)");
        const Permutation f = flip(q, blocks[*block]);
        out.emit(line(to_string(f)), Json{{"permutation", to_string(f)}});
        return kSuccess;
      };
    });
  }
}

void add_search_commands(Registry& r) {
  {
    auto* sub = r.app.add_subcommand("census", "Interval census of S_n by length");
    sub->fallthrough();
    auto n = std::make_shared<int>(0);
    auto kmin = std::make_shared<int>(1);
    auto kmax = std::make_shared<int>(-1);
    sub->add_option("--n", *n, "degree")->required()->check(CLI::Range(1, 12));
    sub->add_option("--kmin", *kmin, "smallest length difference")->capture_default_str();
    sub->add_option("--kmax", *kmax, "largest length difference (default n(n-1)/2)");
    Action* selected = r.selected;
    Options* opt = &r.opt;
    sub->callback([selected, opt, n, kmin, kmax] {
      *selected = [opt, n, kmin, kmax](Printer& out) {
        const int top = *kmax < 0 ? std::max(1, *n * (*n - 1) / 2) : *kmax;
        const auto rows = interval_census(*n, *kmin, top, opt->threads, opt->force);
        std::ostringstream text;
        text << "k\ttotal\thypercubes\n";
        for (const auto& row : rows) text << row.k << '\t' << row.total << '\t' << row.hypercubes << '\n';
        out.emit(text.str(), census_to_json(*n, rows), census_to_csv(rows));
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("maxd", "f(n): largest d-invariant in S_n");
    sub->fallthrough();
    auto n = std::make_shared<int>(0);
    sub->add_option("--n", *n, "degree")->required()->check(CLI::Range(1, 12));
    Action* selected = r.selected;
    Options* opt = &r.opt;
    sub->callback([selected, opt, n] {
      *selected = [opt, n](Printer& out) {
        const MaxDResult res = max_d(*n, opt->threads, opt->force);
        out.emit(line(std::to_string(res.f)) + line("x: " + to_string(res.x)) + line("y: " + to_string(res.y)),
                 to_json(res),
                 "n,f,x,y\n" + std::to_string(res.n) + ',' + std::to_string(res.f) + ',' + to_string(res.x) + ',' +
                     to_string(res.y) + '\n');
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("funsearch-pair", "Pair produced by a generator program");
    sub->fallthrough();
    auto n = std::make_shared<int>(0);
    auto program = std::make_shared<std::string>("first");
    sub->add_option("--n", *n, "degree")->required()->check(CLI::Range(5, 64));
    sub->add_option("--program", *program, "first, second or start3")
        ->check(CLI::IsMember({"first", "second", "start3"}))
        ->capture_default_str();
    Action* selected = r.selected;
    Options* opt = &r.opt;
    sub->callback([selected, opt, n, program] {
      *selected = [opt, n, program](Printer& out) {
        const GeneratorProgram which = *program == "first"    ? GeneratorProgram::first
                                       : *program == "second" ? GeneratorProgram::second
                                                              : GeneratorProgram::start3;
        const GeneratedPair g = funsearch_pair(*n, which);
        for (int l : g.dropped)
          *opt->err << "warning: dropped letter " << l << " outside 1.." << *n - 1 << '\n';
        const bool comparable = bruhat_leq(g.x, g.y);
        Json j{{"n", *n}, {"program", *program}, {"x", to_string(g.x)}, {"y", to_string(g.y)},
               {"comparable", comparable}, {"dropped", g.dropped}};
        std::string text = line("x: " + to_string(g.x)) + line("y: " + to_string(g.y));
        if (comparable) {
          const std::int64_t d = d_invariant(g.x, g.y);
          j["d"] = d;
          text += line("d: " + std::to_string(d));
        } else {
          j["d"] = nullptr;
          text += line("d: undefined (x is not below y)");
        }
        out.emit(text, j);
        return comparable ? kSuccess : kNegative;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("baseline", "The n = 12 baseline pair with d = 20");
    sub->fallthrough();
    Action* selected = r.selected;
    sub->callback([selected] {
      *selected = [](Printer& out) {
        const auto [x, y] = baseline_n12();
        const std::int64_t d = d_invariant(x, y);
        out.emit(line("x: " + to_string(x)) + line("y: " + to_string(y)) + line("d: " + std::to_string(d)),
                 Json{{"n", 12}, {"x", to_string(x)}, {"y", to_string(y)}, {"d", d}});
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("search", "Seeded local search for large d");
    sub->fallthrough();
    auto n = std::make_shared<int>(0);
    auto start = std::make_shared<std::vector<std::string>>();
    sub->add_option("--n", *n, "degree")->check(CLI::Range(1, 64));
    sub->add_option("--start", *start, "explicit starting pair x y")->expected(2);
    Action* selected = r.selected;
    Options* opt = &r.opt;
    sub->callback([selected, opt, n, start] {
      *selected = [opt, n, start](Printer& out) {
        SearchState s;
        if (!start->empty()) {
          const auto [x, y] = read_pair((*start)[0], (*start)[1]);
          s = local_search_d(x, y, opt->seed, opt->budget);
        } else {
          if (*n < 1) throw InputError("search needs --n or --start");
          s = local_search_d(*n, opt->seed, opt->budget);
        }
        out.emit(line(std::to_string(s.score)) + line("x: " + to_string(s.x)) + line("y: " + to_string(s.y)),
                 to_json(s));
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("verify-theorem", "Check DWD_m = [x_m, y_m] as a hypercube");
    sub->fallthrough();
    auto m = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>("full");
    auto samples = std::make_shared<std::size_t>(10000);
    sub->add_option("--m", *m, "exponent")->required()->check(CLI::Range(1, 10));
    sub->add_option("--mode", *mode, "full or sampled")->check(CLI::IsMember({"full", "sampled"}))->capture_default_str();
    sub->add_option("--samples", *samples, "pairs in sampled mode")->capture_default_str();
    Action* selected = r.selected;
    Options* opt = &r.opt;
    sub->callback([selected, opt, m, mode, samples] {
      *selected = [opt, m, mode, samples](Printer& out) {
        const TheoremReport rep = verify_main_theorem(
            *m, *mode == "full" ? VerifyMode::full : VerifyMode::sampled, *samples, opt->seed, opt->threads);
        std::ostringstream text;
        text << (rep.passed ? "pass" : "FAIL") << " m=" << rep.m << " mode=" << *mode << " rank=" << rep.rank
             << " elements=" << rep.elements << " pairs=" << rep.pairs_checked
             << " comparable=" << rep.comparable_pairs << '\n';
        for (const auto& f : rep.failures) text << "  " << f << '\n';
        out.emit(text.str(), to_json(rep));
        return rep.passed ? kSuccess : kNegative;
      };
    });
  }
}

void add_tadic_commands(Registry& r) {
  {
    auto* sub = r.app.add_subcommand("dwd-t", "t-adic well-distribution test, labels, or brute-force count");
    sub->fallthrough();
    auto p = std::make_shared<std::string>();
    auto t = std::make_shared<int>(2);
    auto m = std::make_shared<int>(1);
    auto count = std::make_shared<bool>(false);
    sub->add_option("p", *p, "permutation of degree t^m");
    sub->add_option("--t", *t, "base")->required()->check(CLI::Range(2, 64));
    sub->add_option("--m", *m, "exponent")->required()->check(CLI::Range(1, 30));
    sub->add_flag("--count", *count, "count all t-adic dwd permutations by brute force");
    Action* selected = r.selected;
    Options* opt = &r.opt;
    sub->callback([selected, opt, p, t, m, count] {
      *selected = [opt, p, t, m, count](Printer& out) {
        if (*count) {
          const std::int64_t c = count_dwd_t(*t, *m, opt->threads, opt->force);
          out.emit(line(std::to_string(c)), Json{{"t", *t}, {"m", *m}, {"count", c}});
          return kSuccess;
        }
        if (p->empty()) throw InputError("dwd-t needs a permutation or --count");
        const Permutation q = read_perm(*p);
        const bool ok = is_dwd_t(q, *t, *m);
        Json j{{"dwd", ok}};
        std::string text = line(bool_text(ok));
        if (ok) {
          const TCubeCoordinates c = encode_phi_t(q, *t, *m);
          j["coordinates"] = to_json(c);
          text += line(to_string(c));
        }
        out.emit(text, j);
        return ok ? kSuccess : kNegative;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("gen-xy-t", "Base-t digit reversal pair");
    sub->fallthrough();
    auto t = std::make_shared<int>(2);
    auto m = std::make_shared<int>(1);
    sub->add_option("--t", *t, "base")->required()->check(CLI::Range(2, 64));
    sub->add_option("--m", *m, "exponent")->required()->check(CLI::Range(1, 30));
    Action* selected = r.selected;
    sub->callback([selected, t, m] {
      *selected = [t, m](Printer& out) {
        const Permutation x = gen_x_t(*t, *m), y = gen_y_t(*t, *m);
        out.emit(line(to_string(x)) + line(to_string(y)),
                 Json{{"t", *t}, {"m", *m}, {"x", to_string(x)}, {"y", to_string(y)}});
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("net-export", "Write the point set {(j, p(j))} as a net file");
    sub->fallthrough();
    auto p = std::make_shared<std::string>();
    auto t = std::make_shared<int>(2);
    auto m = std::make_shared<int>(0);
    sub->add_option("p", *p, "permutation of degree t^m")->required();
    sub->add_option("--t", *t, "base")->capture_default_str()->check(CLI::Range(2, 64));
    sub->add_option("--m", *m, "exponent (default: inferred)");
    Action* selected = r.selected;
    sub->callback([selected, p, t, m] {
      *selected = [p, t, m](Printer& out) {
        const Permutation q = read_perm(*p);
        int exponent = *m;
        if (exponent == 0) {
          std::int64_t size = 1;
          while (size < q.size()) {
            size *= *t;
            ++exponent;
          }
          if (size != q.size()) throw InputError("degree is not a power of t");
        }
        const NetPointSet pts = net_points(q, *t, exponent);
        std::ostringstream text;
        write_net(text, pts);
        Json points = Json::array();
        for (const auto& [a, b] : pts.points) points.push_back({a, b});
        out.emit(text.str(), Json{{"t", pts.t}, {"m", pts.m}, {"points", points}});
        return kSuccess;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("net-check", "Is a net file a (0, m, 2)-net in base t");
    sub->fallthrough();
    auto path = std::make_shared<std::string>();
    sub->add_option("file", *path, "net file")->required();
    Action* selected = r.selected;
    sub->callback([selected, path] {
      *selected = [path](Printer& out) {
        std::ifstream in = open_input(*path);
        const bool ok = is_net(read_net(in));
        out.emit(line(bool_text(ok)), Json{{"net", ok}}, line(bool_text(ok)));
        return ok ? kSuccess : kNegative;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("digital-coset", "The double coset B x_m B and its dwd check");
    sub->fallthrough();
    auto m = std::make_shared<int>(0);
    auto affine = std::make_shared<bool>(false);
    auto list = std::make_shared<bool>(false);
    sub->add_option("--m", *m, "exponent")->required()->check(CLI::Range(1, 10));
    sub->add_flag("--affine", *affine, "include translations on both sides");
    sub->add_flag("--list", *list, "print every element");
    Action* selected = r.selected;
    sub->callback([selected, m, affine, list] {
      *selected = [m, affine, list](Printer& out) {
        const auto coset = digital_net_coset(*m, *affine);
        const Permutation x = gen_x(*m), y = gen_y(*m);
        std::size_t dwd = 0, inside = 0;
        for (const auto& p : coset) {
          if (is_dwd(p)) ++dwd;
          if (bruhat_leq(x, p) && bruhat_leq(p, y)) ++inside;
        }
        const bool ok = dwd == coset.size() && inside == coset.size();
        std::ostringstream text;
        text << "size " << coset.size() << "\ndwd " << dwd << "\nin_interval " << inside << '\n';
        Json j{{"m", *m}, {"affine", *affine}, {"size", coset.size()}, {"dwd", dwd}, {"in_interval", inside}};
        if (*list) {
          Json elements = Json::array();
          for (const auto& p : coset) {
            text << to_string(p) << '\n';
            elements.push_back(to_string(p));
          }
          j["elements"] = std::move(elements);
        }
        out.emit(text.str(), j);
        return ok ? kSuccess : kNegative;
      };
    });
  }
  {
    auto* sub = r.app.add_subcommand("sudoku-check", "Validate a generalized Sudoku grid");
    sub->fallthrough();
    auto path = std::make_shared<std::string>();
    auto t = std::make_shared<int>(3);
    auto m = std::make_shared<int>(2);
    sub->add_option("file", *path, "grid file, t^m rows of t^m symbols")->required();
    sub->add_option("--t", *t, "base")->capture_default_str()->check(CLI::Range(2, 64));
    sub->add_option("--m", *m, "exponent")->capture_default_str()->check(CLI::Range(1, 10));
    Action* selected = r.selected;
    sub->callback([selected, path, t, m] {
      *selected = [path, t, m](Printer& out) {
        std::ifstream in = open_input(*path);
        const bool ok = validate_sudoku(read_sudoku(in, *t, *m));
        out.emit(line(bool_text(ok)), Json{{"valid", ok}}, line(bool_text(ok)));
        return ok ? kSuccess : kNegative;
      };
    });
  }
}

void add_embedding_commands(Registry& r) {
  auto* sub = r.app.add_subcommand("embed-check", "Geometric embedding of [x, y] and the good-embedding test");
  sub->fallthrough();
  auto a = std::make_shared<std::string>();
  auto b = std::make_shared<std::string>();
  sub->add_option("x", *a, "lower permutation")->required();
  sub->add_option("y", *b, "upper permutation")->required();
  Action* selected = r.selected;
  Options* opt = &r.opt;
  sub->callback([selected, opt, a, b] {
    *selected = [opt, a, b](Printer& out) {
      const auto [x, y] = read_pair(*a, *b);
      const EmbeddedGraph eg = geometric_embedding(interval(x, y));
      const bool good = check_good_embedding(eg, opt->tol);
      Json j = to_json(eg);
      j["good"] = good;
      out.emit(line(bool_text(good)), j, line(bool_text(good)));
      return good ? kSuccess : kNegative;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.err = &err;
  opt.threads = default_thread_count();
  Action selected;

  CLI::App app{"Bruhat intervals, d-invariants and dyadically well-distributed permutations", "bruhatcube"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "worker count (default BRUHATCUBE_THREADS or all cores)")
      ->check(CLI::Range(1u, 1024u));
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--budget", opt.budget, "local search evaluation budget")->capture_default_str();
  app.add_flag("--force", opt.force, "override size guards");
  app.add_option("--tol", opt.tol, "embedding tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", opt.out_path, "write results to this file instead of stdout");

  Registry registry{app, opt, &selected};
  add_permutation_commands(registry);
  add_dwd_commands(registry);
  add_tadic_commands(registry);
  add_embedding_commands(registry);
  add_search_commands(registry);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Printer printer(opt);
  int code = kSuccess;
  try {
    code = selected(printer);
  } catch (const SizeLimitError& e) {
    err << "refused: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (opt.out_path.empty()) {
    out << printer.str();
  } else {
    std::ofstream file(opt.out_path);
    if (!file) {
      err << "error: cannot write '" << opt.out_path << "'\n";
      return kUsage;
    }
    file << printer.str();
  }
  return code;
}

}  // namespace bruhatcube::cli
