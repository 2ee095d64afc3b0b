#include "cli/app.hpp"

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <ordmap/conjecture.hpp>
#include <ordmap/errors.hpp>
#include <ordmap/existence.hpp>
#include <ordmap/group.hpp>
#include <ordmap/linear_map.hpp>
#include <ordmap/spectrum.hpp>

#include "cli/descriptor.hpp"
#include "cli/render.hpp"

namespace ordmap::cli {

namespace {

constexpr const char* kFormatHelp = "output format";
constexpr const char* kModeHelp = "order comparison between an element and its image";
constexpr const char* kBoundHelp = "largest group order the command may enumerate";

OutputFormat to_format(const std::string& name) {
  return *format_from_name(name);  // membership is validated during parsing
}

ComparisonMode to_mode(const std::string& name) { return *mode_from_name(name); }

void add_format(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, kFormatHelp)
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
}

void add_mode(CLI::App* cmd, std::string& target) {
  cmd->add_option("--mode", target, kModeHelp)
      ->check(CLI::IsMember({"divides", "divided-by", "geq", "leq"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"order spectra and order-dividing bijections for finite groups"};
  app.require_subcommand(1);

  struct {
    std::string group;
    std::string format = "table";
    std::uint64_t bound = kDefaultEnumerationBound;
  } spec_opts;
  CLI::App* spectrum = app.add_subcommand("spectrum", "order spectrum of a group");
  spectrum->add_option("group", spec_opts.group, "group descriptor, e.g. Z6, D8, Q8, Z3xZ6")
      ->required();
  add_format(spectrum, spec_opts.format);
  spectrum->add_option("--bound", spec_opts.bound, kBoundHelp)->capture_default_str();

  CLI::App* map = app.add_subcommand("map", "verify one of the built-in map families");
  map->require_subcommand(1);

  struct {
    std::uint64_t n = 0;
    std::int64_t k = 1;
    std::string mode = "divides";
    std::string format = "table";
    std::uint64_t bound = kDefaultEnumerationBound;
  } dih_opts;
  CLI::App* map_dihedral =
      map->add_subcommand("dihedral", "s^a r^b -> k*a + 2*b from D_2n to Z_2n, odd k");
  map_dihedral->add_option("--n", dih_opts.n, "half the dihedral group order")->required();
  map_dihedral->add_option("--k", dih_opts.k, "odd reflection coefficient")->required();
  add_mode(map_dihedral, dih_opts.mode);
  add_format(map_dihedral, dih_opts.format);
  map_dihedral->add_option("--bound", dih_opts.bound, kBoundHelp)->capture_default_str();

  struct {
    std::uint64_t p = 0;
    std::uint64_t k = 0;
    std::int64_t m = 1;
    std::string mode = "divides";
    std::string format = "table";
    std::uint64_t bound = kDefaultEnumerationBound;
  } prod_opts;
  CLI::App* map_product = map->add_subcommand(
      "product", "(a,b) -> m*k*a + p*b from Z_p x Z_kp to Z_kp^2, odd prime p");
  map_product->add_option("--p", prod_opts.p, "odd prime")->required();
  map_product->add_option("--k", prod_opts.k, "positive integer coprime to p")->required();
  map_product->add_option("--m", prod_opts.m, "extra first-coordinate factor coprime to p");
  add_mode(map_product, prod_opts.mode);
  add_format(map_product, prod_opts.format);
  map_product->add_option("--bound", prod_opts.bound, kBoundHelp)->capture_default_str();

  struct {
    std::uint64_t n = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::string mode = "divides";
    std::string format = "table";
    std::uint64_t bound = kDefaultEnumerationBound;
  } verify_opts;
  CLI::App* verify =
      app.add_subcommand("verify", "verify s^a r^b -> x*a + y*b from D_2n to Z_2n");
  verify->add_option("--n", verify_opts.n, "half the dihedral group order")->required();
  verify->add_option("--x", verify_opts.x, "reflection coefficient")->required();
  verify->add_option("--y", verify_opts.y, "rotation coefficient")->required();
  add_mode(verify, verify_opts.mode);
  add_format(verify, verify_opts.format);
  verify->add_option("--bound", verify_opts.bound, kBoundHelp)->capture_default_str();

  struct {
    std::string src;
    std::string dst;
    std::string mode = "divides";
    std::string format = "table";
    bool realize = false;
    std::uint64_t bound = kDefaultEnumerationBound;
  } exists_opts;
  CLI::App* exists = app.add_subcommand(
      "exists", "does an order-compatible bijection exist between two groups");
  exists->add_option("src", exists_opts.src, "source group descriptor")->required();
  exists->add_option("dst", exists_opts.dst, "target group descriptor")->required();
  add_mode(exists, exists_opts.mode);
  add_format(exists, exists_opts.format);
  exists->add_flag("--realize", exists_opts.realize,
                   "expand a feasible certificate to an element-level pairing");
  exists->add_option("--bound", exists_opts.bound, kBoundHelp)->capture_default_str();

  struct {
    std::uint64_t n_min = 0;
    std::uint64_t n_max = 0;
    unsigned jobs = 1;
    std::string format = "table";
    std::uint64_t bound = kDefaultSearchBound;
  } conj_opts;
  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "search [n_min, n_max] for valid coefficient pairs whose swap is also valid");
  conjecture->add_option("--n-min", conj_opts.n_min, "first n, at least 2")->required();
  conjecture->add_option("--n-max", conj_opts.n_max, "last n")->required();
  conjecture->add_option("--jobs", conj_opts.jobs, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_format(conjecture, conj_opts.format);
  conjecture->add_option("--bound", conj_opts.bound, "largest n the search accepts")
      ->capture_default_str();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("ordmap");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*spectrum) {
      GroupSpec g = parse_group(spec_opts.group);
      out << render_spectrum(g, order_spectrum(g, spec_opts.bound), to_format(spec_opts.format));
      return 0;
    }
    if (*map_dihedral) {
      VerificationReport report = verify_map(dihedral_paper_map(dih_opts.n, dih_opts.k),
                                             to_mode(dih_opts.mode), dih_opts.bound);
      out << render_report(report, to_format(dih_opts.format));
      return report.verdict ? 0 : 1;
    }
    if (*map_product) {
      VerificationReport report =
          verify_map(product_paper_map(prod_opts.p, prod_opts.k, prod_opts.m),
                     to_mode(prod_opts.mode), prod_opts.bound);
      out << render_report(report, to_format(prod_opts.format));
      return report.verdict ? 0 : 1;
    }
    if (*verify) {
      LinearMapSpec spec =
          linear_map(GroupSpec::dihedral(verify_opts.n), verify_opts.x, verify_opts.y);
      VerificationReport report = verify_map(spec, to_mode(verify_opts.mode), verify_opts.bound);
      out << render_report(report, to_format(verify_opts.format));
      return report.verdict ? 0 : 1;
    }
    if (*exists) {
      GroupSpec src = parse_group(exists_opts.src);
      GroupSpec dst = parse_group(exists_opts.dst);
      OrderSpectrum src_spectrum = order_spectrum(src, exists_opts.bound);
      OrderSpectrum dst_spectrum = order_spectrum(dst, exists_opts.bound);
      ComparisonMode mode = to_mode(exists_opts.mode);
      ExistenceCertificate cert = exists_bijection(src_spectrum, dst_spectrum, mode);
      std::optional<PairingTable> realization;
      if (exists_opts.realize && cert.feasible) {
        realization = realize_bijection(src, dst, cert, exists_opts.bound);
      }
      out << render_existence(src, dst, src_spectrum, dst_spectrum, cert, realization,
                              to_format(exists_opts.format));
      return cert.feasible ? 0 : 1;
    }
    if (*conjecture) {
      std::vector<ConjectureReport> reports = sweep_conjecture(
          conj_opts.n_min, conj_opts.n_max, conj_opts.jobs, conj_opts.bound);
      out << render_sweep(reports, to_format(conj_opts.format));
      bool all_hold = true;
      for (const ConjectureReport& r : reports) all_hold = all_hold && r.conjecture_holds;
      return all_hold ? 0 : 1;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args) { return run(args, std::cout, std::cerr); }

}  // namespace ordmap::cli
