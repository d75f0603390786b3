#include "pdmwell/reference_data.hpp"

#include <numbers>

#include <json.hpp>

namespace pdmwell {

double PiForm::value() const {
    return (A + B * std::numbers::pi * std::numbers::pi) / D;
}

namespace {

// Published numbers, decimal commas normalized to points.  Pi-forms are
// stored as [A, B, D] meaning (A + B pi^2)/D.  Erratum cells carry the
// value consistent with the exact 1/a^2 (Fisher/variance) or -ln a
// (entropy) scaling of the whole family; printed values kept alongside.
const char* kJson = R"JSON({
  "version": 1,
  "table2": [
    {"n":0,"kappa":0,"a":2,"S_x":0.6137,"S_p":1.5484,"sum":2.1622},
    {"n":0,"kappa":0,"a":4,"S_x":-0.0794,"S_p":2.2415,"sum":2.1622},
    {"n":0,"kappa":0,"a":6,"S_x":-0.4849,"S_p":2.6470,"sum":2.1622},
    {"n":1,"kappa":0,"a":2,"S_x":0.8484,"S_p":2.1088,"sum":2.9572},
    {"n":1,"kappa":0,"a":4,"S_x":0.1552,"S_p":2.8019,"sum":2.9572},
    {"n":1,"kappa":0,"a":6,"S_x":-0.2501,"S_p":3.2074,"sum":2.9572},
    {"n":1,"kappa":1,"a":2,"S_x":0.1552,"S_p":1.9960,"sum":2.1512},
    {"n":1,"kappa":1,"a":4,"S_x":-0.5378,"S_p":2.6891,"sum":2.1512},
    {"n":1,"kappa":1,"a":6,"S_x":-0.9433,"S_p":3.0946,"sum":2.1512},
    {"n":2,"kappa":0,"a":2,"S_x":0.8571,"S_p":2.4707,"sum":3.3278},
    {"n":2,"kappa":0,"a":4,"S_x":0.1640,"S_p":3.1638,"sum":3.3278},
    {"n":2,"kappa":0,"a":6,"S_x":-0.2415,"S_p":3.5693,"sum":3.3278},
    {"n":2,"kappa":1,"a":2,"S_x":0.4125,"S_p":2.42469,"sum":2.8372},
    {"n":2,"kappa":1,"a":4,"S_x":-0.2806,"S_p":3.1178,"sum":2.8372},
    {"n":2,"kappa":1,"a":6,"S_x":0.6861,"S_p":3.5233,"sum":2.8372,
     "erratum":true,"S_x_derived":-0.6861,
     "note":"sign dropped in print; -ln a scaling from the a=2 row gives -0.6861"},
    {"n":2,"kappa":2,"a":2,"S_x":-0.0874,"S_p":2.2355,"sum":2.1481},
    {"n":2,"kappa":2,"a":4,"S_x":-0.07806,"S_p":2.9287,"sum":2.1481,
     "erratum":true,"S_x_derived":-0.7806,
     "note":"misplaced decimal in print; -ln a scaling from the a=2 row gives -0.7806"},
    {"n":2,"kappa":2,"a":6,"S_x":-1.1861,"S_p":3.3342,"sum":2.1481},
    {"n":3,"kappa":0,"a":2,"S_x":0.8555,"S_p":2.7265,"sum":3.5820},
    {"n":3,"kappa":0,"a":4,"S_x":0.1625,"S_p":3.4195,"sum":3.5820},
    {"n":3,"kappa":0,"a":6,"S_x":-0.2428,"S_p":3.8248,"sum":3.5820}
  ],
  "table3": [
    {"n":0,"kappa":0,"a":2,"F_x":[16,0,3],"F_p":[0,1,12],"var_x":[0,1,48],"var_p":[4,0,3]},
    {"n":0,"kappa":0,"a":4,"F_x":[64,0,3],"F_p":[0,1,48],"var_x":[0,1,192],"var_p":[16,0,3]},
    {"n":0,"kappa":0,"a":6,"F_x":[48,0,1],"F_p":[0,1,108],"var_x":[0,1,432],"var_p":[36,0,3]},
    {"n":1,"kappa":0,"a":2,"F_x":[112,0,5],"F_p":[12,1,12],"var_x":[12,1,48],"var_p":[28,0,5]},
    {"n":1,"kappa":0,"a":4,"F_x":[448,0,5],"F_p":[12,1,48],"var_x":[12,1,192],"var_p":[112,0,5],
     "erratum":true,
     "note":"var_x printed with denominator 196; the 1/a^2 scaling of the family requires 192"},
    {"n":1,"kappa":0,"a":6,"F_x":[1008,0,5],"F_p":[12,1,108],"var_x":[12,1,432],"var_p":[252,0,5]},
    {"n":1,"kappa":1,"a":2,"F_x":[64,0,5],"F_p":[-6,1,12],"var_x":[-6,1,48],"var_p":[16,0,5]},
    {"n":1,"kappa":1,"a":4,"F_x":[256,0,5],"F_p":[-6,1,48],"var_x":[-6,1,192],"var_p":[64,0,5]},
    {"n":1,"kappa":1,"a":6,"F_x":[576,0,5],"F_p":[-6,1,108],"var_x":[-6,1,432],"var_p":[144,0,5]},
    {"n":2,"kappa":0,"a":2,"F_x":[1136,0,21],"F_p":[15,1,12],"var_x":[15,1,48],"var_p":[284,0,21]},
    {"n":2,"kappa":0,"a":4,"F_x":[4544,0,21],"F_p":[15,1,48],"var_x":[15,1,192],"var_p":[1136,0,21]},
    {"n":2,"kappa":0,"a":6,"F_x":[3408,0,7],"F_p":[15,1,108],"var_x":[15,1,432],"var_p":[852,0,7]},
    {"n":2,"kappa":1,"a":2,"F_x":[320,0,7],"F_p":[0,1,12],"var_x":[0,1,48],"var_p":[80,0,7]},
    {"n":2,"kappa":1,"a":4,"F_x":[1280,0,7],"F_p":[0,1,48],"var_x":[0,1,192],"var_p":[320,0,7]},
    {"n":2,"kappa":1,"a":6,"F_x":[2880,0,7],"F_p":[0,1,108],"var_x":[0,1,432],"var_p":[720,0,7]},
    {"n":2,"kappa":2,"a":2,"F_x":[144,0,7],"F_p":[-15,2,24],"var_x":[-15,2,96],"var_p":[36,0,7]},
    {"n":2,"kappa":2,"a":4,"F_x":[576,0,7],"F_p":[-15,2,96],"var_x":[-15,2,384],"var_p":[144,0,7]},
    {"n":2,"kappa":2,"a":6,"F_x":[1296,0,7],"F_p":[-15,2,216],"var_x":[-15,2,864],"var_p":[324,0,7]},
    {"n":3,"kappa":0,"a":2,"F_x":[4592,0,45],"F_p":[49,3,36],"var_x":[49,3,144],"var_p":[1148,0,45]},
    {"n":3,"kappa":0,"a":4,"F_x":[18368,0,45],"F_p":[49,3,144],"var_x":[49,3,576],"var_p":[4592,0,45]},
    {"n":3,"kappa":0,"a":6,"F_x":[4592,0,5],"F_p":[49,3,324],"var_x":[49,3,1296],"var_p":[1148,0,5]}
  ]
})JSON";

PiForm pi_form(const nlohmann::json& arr) {
    return {arr.at(0).get<double>(), arr.at(1).get<double>(), arr.at(2).get<double>()};
}

struct Parsed {
    int version = 0;
    std::vector<EntropyDatum> t2;
    std::vector<FisherDatum> t3;
};

const Parsed& parsed() {
    static const Parsed data = [] {
        Parsed out;
        const nlohmann::json j = nlohmann::json::parse(kJson);
        out.version = j.at("version").get<int>();
        for (const auto& row : j.at("table2")) {
            EntropyDatum d;
            d.n = row.at("n").get<int>();
            d.kappa = row.at("kappa").get<int>();
            d.a = row.at("a").get<double>();
            d.S_x_printed = row.at("S_x").get<double>();
            d.S_p_printed = row.at("S_p").get<double>();
            d.sum_printed = row.at("sum").get<double>();
            d.erratum = row.value("erratum", false);
            d.S_x_derived = row.value("S_x_derived", d.S_x_printed);
            d.note = row.value("note", "");
            out.t2.push_back(std::move(d));
        }
        for (const auto& row : j.at("table3")) {
            FisherDatum d;
            d.n = row.at("n").get<int>();
            d.kappa = row.at("kappa").get<int>();
            d.a = row.at("a").get<double>();
            d.F_x = pi_form(row.at("F_x"));
            d.F_p = pi_form(row.at("F_p"));
            d.var_x = pi_form(row.at("var_x"));
            d.var_p = pi_form(row.at("var_p"));
            d.erratum = row.value("erratum", false);
            d.note = row.value("note", "");
            out.t3.push_back(std::move(d));
        }
        return out;
    }();
    return data;
}

}  // namespace

int reference_data_version() { return parsed().version; }
const std::vector<EntropyDatum>& table_two() { return parsed().t2; }
const std::vector<FisherDatum>& table_three() { return parsed().t3; }
const std::string& reference_data_json() {
    static const std::string s = kJson;
    return s;
}

}  // namespace pdmwell
