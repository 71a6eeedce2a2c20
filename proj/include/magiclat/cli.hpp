#ifndef MAGICLAT_CLI_HPP
#define MAGICLAT_CLI_HPP

#include <magiclat/generate.hpp>
#include <magiclat/hypergraph.hpp>
#include <magiclat/json_io.hpp>
#include <magiclat/magic.hpp>
#include <magiclat/survey.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace magiclat::cli {

// exit codes: 0 success, 1 domain error (bad input file, failed
// precondition, failed verification), 2 usage error

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string section_prefix(std::size_t index, std::size_t count) {
    return count > 1 ? std::to_string(index + 1) + ": " : "";
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"magic labelings of k-uniform hypergraphs over abelian groups"};
    app.require_subcommand(1);

    std::string file, labelfile, outfile, ingest;
    bool json_mode = false, over_z = false;
    int gen_n = 0, survey_n = 0;

    CLI::App* check = app.add_subcommand("check", "decide magicness over some group and over Z");
    check->add_option("file", file, "hypergraph file")->required();
    check->add_flag("--json", json_mode, "emit one JSON document");

    CLI::App* label = app.add_subcommand("label", "produce a witness magic labeling");
    label->add_option("file", file, "hypergraph file")->required();
    label->add_flag("--over-z", over_z, "label over Z instead of a witness group");
    label->add_flag("--json", json_mode, "emit one JSON document");

    CLI::App* cert = app.add_subcommand("cert", "print the non-magicness certificate");
    cert->add_option("file", file, "hypergraph file")->required();
    cert->add_flag("--json", json_mode, "emit one JSON document");

    CLI::App* verify = app.add_subcommand("verify", "check a labeling file against a hypergraph");
    verify->add_option("file", file, "hypergraph file")->required();
    verify->add_option("labelfile", labelfile, "labeling JSON file")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate all n3-configurations");
    gen->add_option("n", gen_n, "number of points")->required()->check(CLI::Range(7, 64));
    gen->add_option("--out", outfile, "write to file instead of standard output");

    CLI::App* survey_cmd = app.add_subcommand("survey", "census of n3-configurations");
    survey_cmd->add_option("n", survey_n, "number of points")->required()->check(CLI::Range(7, 64));
    survey_cmd->add_option("--ingest", ingest, "use configurations from this file");
    survey_cmd->add_flag("--json", json_mode, "emit one JSON document");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dummy;
        app.exit(e, dummy, err);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (*check) {
            std::vector<Hypergraph> hs = parse_hypergraphs(read_file(file));
            json all = json::array();
            for (std::size_t i = 0; i < hs.size(); ++i) {
                Verdict some = decide_some_group(hs[i]);
                Verdict overz = some.magic() ? decide_over_int(hs[i]) : Verdict{};
                if (!some.magic()) overz.kind = Verdict::Kind::NotMagic;
                if (json_mode) {
                    all.push_back({{"some_group", some.magic() ? "Magic" : "NotMagic"},
                                   {"over_z", overz.magic() ? "Magic" : "NotMagic"}});
                } else {
                    out << section_prefix(i, hs.size())
                        << (some.magic() ? "MAGIC over some abelian group"
                                         : "NOT magic over any abelian group")
                        << "; " << (overz.magic() ? "MAGIC over ℤ" : "NOT magic over ℤ")
                        << '\n';
                }
            }
            if (json_mode) out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
            return 0;
        }
        if (*label) {
            Hypergraph h = parse_hypergraph(read_file(file));
            if (over_z) {
                Verdict v = decide_over_int(h);
                if (!v.magic()) {
                    err << "not magic over Z: pair (" << v.obstruction->p << ", "
                        << v.obstruction->q << ")\n";
                    return 1;
                }
                out << to_json(*v.int_witness).dump(2) << '\n';
            } else {
                Verdict v = decide_some_group(h);
                if (!v.magic()) {
                    err << "not magic over any abelian group: pair (" << v.obstruction->p << ", "
                        << v.obstruction->q << ")\n";
                    return 1;
                }
                out << to_json(*v.group_witness).dump(2) << '\n';
            }
            return 0;
        }
        if (*cert) {
            std::vector<Hypergraph> hs = parse_hypergraphs(read_file(file));
            json all = json::array();
            bool any = false;
            for (std::size_t i = 0; i < hs.size(); ++i) {
                Verdict v = decide_some_group(hs[i]);
                std::optional<Certificate> c;
                std::string scope = "any abelian group";
                if (!v.magic()) {
                    c = v.obstruction;
                } else {
                    Verdict vz = decide_over_int(hs[i]);
                    if (!vz.magic()) {
                        c = vz.obstruction;
                        scope = "ℤ";
                    }
                }
                const std::string pre = section_prefix(i, hs.size());
                if (!c) {
                    if (json_mode)
                        all.push_back({{"kind", "Magic"}});
                    else
                        out << pre << "magic over ℤ; no certificate\n";
                    continue;
                }
                any = true;
                if (json_mode) {
                    json j = to_json(*c);
                    j["kind"] = "NotMagic";
                    j["scope"] = scope == "ℤ" ? "Z" : "some-group";
                    all.push_back(j);
                } else {
                    out << pre << "not magic over " << scope << ": pair (" << c->p << ", " << c->q
                        << "), coefficients (";
                    for (std::size_t j = 0; j < c->coeffs.size(); ++j) {
                        if (j) out << ", ";
                        out << c->coeffs[j].get_str();
                    }
                    out << ")";
                    if (c->denominator != 1) out << ", denominator " << c->denominator.get_str();
                    out << '\n';
                }
            }
            if (json_mode) out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
            return any ? 0 : 1;
        }
        if (*verify) {
            Hypergraph h = parse_hypergraph(read_file(file));
            json j = json::parse(read_file(labelfile));
            auto lab = labeling_from_json(j);
            VerifyResult r = std::visit([&](const auto& l) { return verify_labeling(h, l); }, lab);
            if (r.ok) {
                out << "valid magic labeling\n";
                return 0;
            }
            err << "invalid labeling: " << r.diagnostic << '\n';
            return 1;
        }
        if (*gen) {
            std::ostringstream buf;
            std::size_t count = 0;
            generate_n3(gen_n, [&](const Hypergraph& h) {
                if (count) buf << "%\n";
                buf << serialize(h);
                ++count;
            });
            if (outfile.empty()) {
                out << buf.str();
            } else {
                std::ofstream o(outfile, std::ios::binary);
                if (!o) throw std::runtime_error("cannot write " + outfile);
                o << buf.str();
            }
            err << count << " configuration(s)\n";
            return 0;
        }
        if (*survey_cmd) {
            SurveyRow row = ingest.empty() ? survey(survey_n)
                                           : survey_ingest(survey_n, read_file(ingest));
            if (json_mode)
                out << to_json(row).dump(2) << '\n';
            else
                out << row.to_string() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace magiclat::cli

#endif
