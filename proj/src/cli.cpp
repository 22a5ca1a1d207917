#include "bottomless/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bottomless/colorer.hpp"
#include "bottomless/constructions.hpp"
#include "bottomless/planar.hpp"
#include "bottomless/point_io.hpp"
#include "bottomless/set_system.hpp"
#include "bottomless/subprocess.hpp"
#include "bottomless/svg.hpp"
#include "bottomless/verify.hpp"

namespace bottomless {

namespace {

struct CliError {
  int code;
  std::string message;
};

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<PointRecord> load_points(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CliError{2, "cannot open " + path};
  try {
    return read_points(f);
  } catch (const ParseError& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

std::vector<ColorRecord> load_colors(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CliError{2, "cannot open " + path};
  try {
    return read_colors(f);
  } catch (const ParseError& e) {
    throw CliError{2, path + ": " + e.what()};
  }
}

PlanarPointSet to_planar(const std::vector<PointRecord>& recs,
                         bool normalize_requested, const std::string& name) {
  PlanarPointSet s;
  s.points.reserve(recs.size());
  for (const auto& r : recs) s.points.push_back({r.x, r.y});
  s.normalized = is_normalized(s);
  if (!s.normalized) {
    if (!normalize_requested)
      throw CliError{2, name + ": duplicate coordinates; pass --normalize"};
    s = normalize(std::move(s), TiePolicy::Perturb);
  }
  return s;
}

void require_same_ids(const std::vector<PointRecord>& pts,
                      const std::vector<ColorRecord>& cols,
                      const std::string& pname, const std::string& cname) {
  if (pts.size() != cols.size())
    throw CliError{2, "id mismatch: " + pname + " has " +
                          std::to_string(pts.size()) + " records, " + cname +
                          " has " + std::to_string(cols.size())};
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].id != cols[i].id)
      throw CliError{2, "id mismatch between " + pname + " and " + cname +
                            " at record " + std::to_string(i)};
}

void emit(const std::string& out_path, std::ostream& out,
          const std::string& data) {
  if (out_path.empty()) {
    out << data;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw CliError{2, "cannot open " + out_path + " for writing"};
  f << data;
  if (!f) throw CliError{2, "write failed: " + out_path};
}

std::vector<int> color_online(const PlanarPointSet& s, int k) {
  OnlineColorer oc(k);
  for (int r : sweep_order(s)) oc.insert(s.points[r].x);
  int n = static_cast<int>(s.points.size());
  std::vector<int> by_x(n);
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](int a, int b) { return s.points[a].x < s.points[b].x; });
  std::vector<int> colors(n);
  for (int i = 0; i < n; ++i) colors[by_x[i]] = oc.sequence().color(i);
  return colors;
}

const char* kind_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::WindowMissingColor: return "window-missing-color";
    case ViolationKind::WindowRepeatedColor: return "window-repeated-color";
    case ViolationKind::GapTooLarge: return "gap-too-large";
    case ViolationKind::InternalGapTooSmall: return "internal-gap-too-small";
  }
  return "unknown";
}

int run_color(const std::string& input, int k, const std::string& mode,
              bool normalize_requested, const std::string& out_path,
              std::ostream& out) {
  auto recs = load_points(input);
  auto s = to_planar(recs, normalize_requested, input);
  std::vector<int> colors =
      mode == "online" ? color_online(s, k) : color_bottomless(s, k);
  std::vector<ColorRecord> crecs;
  crecs.reserve(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i)
    crecs.push_back({recs[i].id, recs[i].x, recs[i].y, colors[i]});
  std::ostringstream os;
  write_colors(os, crecs);
  emit(out_path, out, os.str());
  return 0;
}

int run_verify(const std::string& input, const std::string& coloring_path,
               int k, int w, const std::string& mode_str,
               bool normalize_requested, std::ostream& out) {
  auto recs = load_points(input);
  auto crecs = load_colors(coloring_path);
  require_same_ids(recs, crecs, input, coloring_path);
  auto s = to_planar(recs, normalize_requested, input);
  std::vector<int> coloring;
  coloring.reserve(crecs.size());
  for (const auto& r : crecs) coloring.push_back(r.color);
  Mode mode = mode_str == "norepeat" ? Mode::NoRepeat : Mode::AllColorsPresent;
  auto violations = verify_rectangles(s, coloring, w, mode, k);
  std::ostringstream os;
  os << "violations: " << violations.size() << '\n';
  for (std::size_t i = 0; i < violations.size() && i < 10; ++i) {
    const Violation& v = violations[i];
    os << kind_name(v.kind) << " event=" << v.event << " range=[" << v.lo
       << ',' << v.hi << "] color=" << v.color << '\n';
  }
  out << os.str();
  return violations.empty() ? 0 : 1;
}

int run_construct(const std::string& kind, int p, int n, int a, int k,
                  const std::string& out_path, std::ostream& out) {
  std::ostringstream os;
  try {
    if (kind == "tree") {
      if (p < 0) throw CliError{2, "construct tree requires --p"};
      TreeSystem ts = build_tree_segments(p);
      tree_self_check(ts);
      os << "# tree p=" << p << ": " << ts.vertices.size() << " segments, "
         << ts.sibling_set_count << " sibling sets, " << ts.path_set_count
         << " path sets\n";
      os << "# self-check: structure ok\n";
      if (p <= 3) {
        auto res = check_set_system_2colorable(ts.sets);
        if (res.coloring)
          throw CliError{1, "self-check failed: the family is 2-colorable"};
        os << "# self-check: no proper 2-coloring (" << res.examined
           << " colorings examined)\n";
        std::uint64_t cover = check_corner_cover(ts);
        os << "# self-check: corner cover ok (" << cover
           << " colorings checked)\n";
      } else {
        os << "# self-check: exhaustive coloring checks skipped (ground too "
              "large)\n";
      }
      std::vector<SegmentRecord> segs;
      for (const auto& v : ts.vertices)
        segs.push_back({v.id, v.seg.x_lo, v.seg.x_hi, v.seg.y});
      write_segments(os, segs);
    } else if (kind == "lowerbound") {
      if (n < 0 || a < 0)
        throw CliError{2, "construct lowerbound requires --n and --a"};
      PlanarPointSet s = build_lower_bound_set(n, a);
      lower_bound_self_check(s, n, a);
      os << "# lowerbound n=" << n << " a=" << a << ": " << s.points.size()
         << " points\n";
      os << "# self-check: structure ok\n";
      std::vector<PointRecord> pts;
      for (std::size_t i = 0; i < s.points.size(); ++i)
        pts.push_back({static_cast<long long>(i), s.points[i].x,
                       s.points[i].y});
      write_points(os, pts);
    } else {
      if (k < 0) throw CliError{2, "construct ckwitness requires --k"};
      if (k < 1 || k > 64)
        throw CliError{2, "--k must be between 1 and 64 (the pair check is cubic)"};
      PlanarPointSet s = build_ck_witness(k);
      ck_witness_self_check(s, k);
      os << "# ckwitness k=" << k << ": " << s.points.size() << " points\n";
      os << "# self-check: every pair shares a rectangle trapping at most "
         << k << " points\n";
      std::vector<PointRecord> pts;
      for (std::size_t i = 0; i < s.points.size(); ++i)
        pts.push_back({static_cast<long long>(i), s.points[i].x,
                       s.points[i].y});
      write_points(os, pts);
    }
  } catch (const std::invalid_argument& e) {
    throw CliError{2, e.what()};
  } catch (const std::logic_error& e) {
    throw CliError{1, std::string("self-check failed: ") + e.what()};
  }
  emit(out_path, out, os.str());
  return 0;
}

int run_plot(const std::string& input, const std::string& colors_path,
             const std::string& rect_str, const std::string& out_path,
             std::ostream& out) {
  auto recs = load_points(input);
  std::vector<int> colors;
  if (!colors_path.empty()) {
    auto crecs = load_colors(colors_path);
    require_same_ids(recs, crecs, input, colors_path);
    for (const auto& r : crecs) {
      if (r.color > svg_max_color())
        throw CliError{2, "palette supports colors up to " +
                              std::to_string(svg_max_color())};
      colors.push_back(r.color);
    }
  }
  std::optional<BottomlessRect> rect;
  if (!rect_str.empty()) {
    std::istringstream rs(rect_str);
    std::string fa, fb, fc;
    if (!std::getline(rs, fa, ',') || !std::getline(rs, fb, ',') ||
        !std::getline(rs, fc))
      throw CliError{2, "--rect expects a,b,c"};
    auto a = parse_rational(trim(fa));
    auto b = parse_rational(trim(fb));
    auto c = parse_rational(trim(fc));
    if (!a || !b || !c) throw CliError{2, "--rect expects rational a,b,c"};
    if (*a > *b) throw CliError{2, "--rect requires a <= b"};
    rect = BottomlessRect{*a, *b, *c};
  }
  emit(out_path, out, render_svg(recs, colors, rect));
  return 0;
}

class SeededAnswers {
 public:
  explicit SeededAnswers(unsigned seed) : rng_(seed) {}
  int next() { return (rng_() & 1u) ? kRed : kBlue; }

 private:
  std::mt19937 rng_;
};

int answer_for(const std::string& name, const std::vector<int>& visible,
               SeededAnswers& seeded) {
  if (name == "always-red") return kRed;
  if (name == "always-blue") return kBlue;
  if (name == "alternate")
    return (visible.size() - 1) % 2 == 0 ? kRed : kBlue;
  if (name == "balance-greedy") {
    int c1 = 0, c2 = 0;
    for (int c : visible) {
      if (c == kRed) ++c1;
      if (c == kBlue) ++c2;
    }
    return c1 <= c2 ? kRed : kBlue;
  }
  return seeded.next();
}

bool is_builtin_strategy(const std::string& name) {
  return name == "always-red" || name == "always-blue" ||
         name == "alternate" || name == "balance-greedy" || name == "seeded";
}

std::string protocol_line(const std::vector<int>& visible) {
  std::string line;
  for (std::size_t i = 0; i < visible.size(); ++i) {
    if (i) line += ' ';
    line += std::to_string(i);
    line += ':';
    line += std::to_string(visible[i]);
  }
  return line;
}

int run_adversary(const std::string& strategy_str, long long steps,
                  unsigned seed, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  std::unique_ptr<LineProcess> proc;
  SeededAnswers seeded(seed);
  Strategy strat;
  if (is_builtin_strategy(strategy_str)) {
    strat = [&](const std::vector<int>& visible) {
      return answer_for(strategy_str, visible, seeded);
    };
  } else {
    proc = std::make_unique<LineProcess>(strategy_str);
    strat = [&](const std::vector<int>& visible) {
      proc->send_line(protocol_line(visible));
      auto ans = proc->recv_line();
      if (!ans) throw ProtocolError("strategy closed its output");
      std::string t = trim(*ans);
      if (t == "1") return kRed;
      if (t == "2") return kBlue;
      throw ProtocolError("strategy answered '" + t + "'");
    };
  }

  AdversaryState st;
  try {
    for (long long step = 0; step < steps; ++step) adversary_step(st, strat);
  } catch (const ProtocolError& e) {
    throw CliError{2, std::string("strategy protocol violation: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    throw CliError{2, std::string("strategy protocol violation: ") + e.what()};
  } catch (const std::runtime_error& e) {
    throw CliError{2, std::string("strategy protocol violation: ") + e.what()};
  }
  if (proc) proc->close_and_wait();

  int run = max_mono_run(st.colors);
  long long bound = (steps + 1) / 2;
  std::ostringstream os;
  os << "# adversary transcript: step,position,color\n";
  for (std::size_t i = 0; i < st.transcript.size(); ++i)
    os << (i + 1) << ',' << st.transcript[i].first << ','
       << st.transcript[i].second << '\n';
  os << "# steps=" << steps << " max_run=" << run << " bound=" << bound
     << '\n';
  emit(out_path, out, os.str());
  if (run < bound) {
    err << "error: max monochromatic run " << run << " fell below " << bound
        << '\n';
    return 1;
  }
  return 0;
}

int run_strategy(const std::string& name, unsigned seed, std::istream& in,
                 std::ostream& out) {
  SeededAnswers seeded(seed);
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty()) continue;
    std::vector<int> visible;
    std::istringstream ls(t);
    std::string tok;
    std::vector<std::pair<int, int>> pairs;
    while (ls >> tok) {
      std::size_t colon = tok.find(':');
      if (colon == std::string::npos)
        throw CliError{2, "bad protocol token '" + tok + "'"};
      int pos = 0, color = 0;
      auto [p1, e1] = std::from_chars(tok.data(), tok.data() + colon, pos);
      auto [p2, e2] = std::from_chars(tok.data() + colon + 1,
                                      tok.data() + tok.size(), color);
      if (e1 != std::errc() || p1 != tok.data() + colon ||
          e2 != std::errc() || p2 != tok.data() + tok.size())
        throw CliError{2, "bad protocol token '" + tok + "'"};
      pairs.emplace_back(pos, color);
    }
    visible.assign(pairs.size(), -1);
    for (auto [pos, color] : pairs) {
      if (pos < 0 || pos >= static_cast<int>(pairs.size()) ||
          visible[pos] != -1)
        throw CliError{2, "protocol positions must be 0..n exactly once"};
      visible[pos] = color;
    }
    out << answer_for(name, visible, seeded) << '\n';
    out.flush();
  }
  return 0;
}

}  // namespace

int cli_main(std::vector<std::string> args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Colors dynamic 1-D and planar point sets with k colors so every "
      "window of 3k-2 consecutive points (every bottomless rectangle with "
      ">= 3k-2 points) contains all k colors; verifies, constructs hard "
      "instances, and renders figures."};
  app.name("bottomless");

  std::string input, coloring_path, mode, out_path, kind, rect_str;
  std::string strategy_str, strategy_name;
  int k = 0, w = 0, p = -1, n = -1, a = -1, ck = -1;
  long long steps = 0;
  unsigned seed = 0;
  bool normalize_requested = false;

  auto* c_color = app.add_subcommand(
      "color", "Color a point file; writes id,x,y,color lines");
  c_color->add_option("input", input, "point file (id,x,y or x,y lines)")
      ->required();
  c_color->add_option("-k,--k", k, "number of colors")
      ->required()
      ->check(CLI::PositiveNumber);
  c_color->add_option("--mode", mode, "semi (default) or online")
      ->default_val("semi")
      ->check(CLI::IsMember({"semi", "online"}));
  c_color->add_flag("--normalize", normalize_requested,
                    "perturb duplicate coordinates instead of failing");
  c_color->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* c_verify = app.add_subcommand(
      "verify", "Check a coloring file against every bottomless rectangle");
  c_verify->add_option("input", input, "point file")->required();
  c_verify->add_option("coloring", coloring_path, "coloring file")->required();
  c_verify->add_option("-k,--k", k, "number of colors")
      ->required()
      ->check(CLI::PositiveNumber);
  c_verify->add_option("-w,--w", w, "window size")
      ->required()
      ->check(CLI::PositiveNumber);
  c_verify->add_option("--mode", mode,
                       "present: every w-point rectangle has all k colors; "
                       "norepeat: no rectangle with <= w points repeats one")
      ->default_val("present")
      ->check(CLI::IsMember({"present", "norepeat"}));
  c_verify->add_flag("--normalize", normalize_requested,
                     "perturb duplicate coordinates instead of failing");

  auto* c_construct = app.add_subcommand(
      "construct", "Generate a hard instance; self-checks always run");
  c_construct->add_option("kind", kind, "tree, lowerbound, or ckwitness")
      ->required()
      ->check(CLI::IsMember({"tree", "lowerbound", "ckwitness"}));
  c_construct->add_option("--p", p, "tree: arity and depth (2..4)");
  c_construct->add_option("--n", n, "lowerbound: chain length");
  c_construct->add_option("--a", a, "lowerbound: bottom row length");
  c_construct->add_option("--k", ck, "ckwitness: color count (1..64)");
  c_construct->add_option("-o,--out", out_path,
                          "output file (default stdout)");

  auto* c_plot = app.add_subcommand("plot", "Render a point file as SVG");
  c_plot->add_option("input", input, "point file")->required();
  c_plot->add_option("--colors", coloring_path, "coloring file");
  c_plot->add_option("--rect", rect_str,
                     "shade the bottomless rectangle a,b,c");
  c_plot->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* c_adversary = app.add_subcommand(
      "adversary",
      "Force long monochromatic runs against an online 2-coloring strategy. "
      "Built-ins: always-red, always-blue, alternate, balance-greedy, "
      "seeded; anything else runs as `/bin/sh -c CMD` speaking the line "
      "protocol (one line per step: the sequence as pos:color pairs, the "
      "new point marked 0; answer 1 or 2)");
  c_adversary->add_option("--strategy", strategy_str, "built-in name or shell command")
      ->required();
  c_adversary->add_option("--steps", steps, "number of insertions")
      ->required()
      ->check(CLI::NonNegativeNumber);
  c_adversary->add_option("--seed", seed, "seed for the seeded built-in");
  c_adversary->add_option("-o,--out", out_path,
                          "output file (default stdout)");

  auto* c_strategy = app.add_subcommand(
      "strategy",
      "Answer the adversary line protocol on stdin (for use as an external "
      "strategy process)");
  c_strategy->add_option("--name", strategy_name, "responder")
      ->default_val("seeded")
      ->check(CLI::IsMember({"always-red", "always-blue", "alternate",
                             "balance-greedy", "seeded"}));
  c_strategy->add_option("--seed", seed, "seed for the seeded responder");

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*c_color)
      return run_color(input, k, mode, normalize_requested, out_path, out);
    if (*c_verify)
      return run_verify(input, coloring_path, k, w, mode,
                        normalize_requested, out);
    if (*c_construct)
      return run_construct(kind, p, n, a, ck, out_path, out);
    if (*c_plot)
      return run_plot(input, coloring_path, rect_str, out_path, out);
    if (*c_adversary)
      return run_adversary(strategy_str, steps, seed, out_path, out, err);
    if (*c_strategy) return run_strategy(strategy_name, seed, in, out);
  } catch (const CliError& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace bottomless
