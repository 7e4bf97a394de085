#pragma once

// Reference tables of the coproduct and the substitution law, transcribed
// cell by cell into the text notation of this library. Forest and cell texts
// are kept exactly as printed, including non-canonical orderings and
// misprints; corrections live in the acceptance driver next to the reason
// for each one.

#include <vector>

struct PrintedRow {
    const char* forest;
    const char* cell;
};

// Coproduct of the unit and of every connected forest with at most 4 vertices,
// as "m*(left|right)" terms.
inline const std::vector<PrintedRow> coproduct_table = {
    {"1", "1*(1|1)"},
    {"b", "1*(1|b) + 1*(b|1)"},
    {"<b>", "1*(1|<b>) + 1*(<b>|1)"},
    {"b[b]", "1*(1|b[b]) + 1*(b|b) + 1*(b[b]|1)"},
    {"<b[b]>", "1*(1|<b[b]>) + 1*(b|<b>) + 1*(<b[b]>|1)"},
    {"<b,b>", "1*(1|<b,b>) + 1*(<b,b>|1)"},
    {"b[b,b]", "1*(1|b[b,b]) + 2*(b|b[b]) + 1*(b b|b) + 1*(b[b,b]|1)"},
    {"b[b[b]]", "1*(1|b[b[b]]) + 1*(b|b[b]) + 1*(b[b]|b) + 1*(b[b[b]]|1)"},
    {"<b[b,b]>", "1*(1|<b[b,b]>) + 2*(b|<b[b]>) + 1*(b b|<b>) + 1*(<b[b,b]>|1)"},
    {"<b[b[b]]>", "1*(1|<b[b[b]]>) + 1*(b|<b[b]>) + 1*(b[b]|<b>) + 1*(b[b[b]]|1)"},
    {"<b[b],b>", "1*(1|<b[b],b>) + 1*(b|<b,b>) + 1*(<b[b],b>|1)"},
    {"<b,b,b>", "1*(1|<b,b,b>) + 1*(<b,b,b>|1)"},
    {"b[b,b,b]", "1*(1|b[b,b,b]) + 3*(b|b[b,b]) + 3*(b b|b[b]) + 1*(b b b|b) + 1*(b[b,b,b]|1)"},
    {"b[b[b],b]", "1*(b|b[b,b]) + 1*(b|b[b[b]]) + 1*(b[b]|b[b]) + 1*(b b|b[b]) + 1*(b[b] b|b) + 1*(b[b[b],b]|1)"},
    {"b[b[b,b]]", "1*(1|b[b[b,b]]) + 2*(b|b[b[b]]) + 1*(b b|b[b]) + 1*(b[b,b]|b) + 1*(b[b[b,b]]|1)"},
    {"b[b[b[b]]]", "1*(1|b[b[b[b]]]) + 1*(b|b[b[b]]) + 1*(b[b]]|b[b]) + 1*(b[b[b]]|b) + 1*(b[b[b[b]]]|1)"},
    {"<b[b,b,b]>", "1*(1|<b[b,b,b]>) + 3*(b|<b[b,b]>) + 3*(b b|<b[b]>) + 1*(b b b|<b>) + 1*(<b[b,b,b]>|1)"},
    {"<b[b[b],b]>", "1*(b|<b[b,b]>) + 1*(b|<b[b[b]]>) + 1*(b[b]|<b[b]>) + 1*(b b|<b[b]>) + 1*(b[b] b|<b>) + 1*(<b[b[b],b]>|1)"},
    {"<b[b[b,b]]>", "1*(1|<b[b[b,b]]>) + 2*(b|<b[b[b]]>) + 1*(b b|<b[b]>) + 1*(b[b,b]|<b>) + 1*(<b[b[b,b]]>|1)"},
    {"<b[b[b[b]]]>", "1*(1|<b[b[b[b]]]>) + 1*(b|<b[b[b]]>) + 1*(b[b]]|<b[b]>) + 1*(b[b[b]]|<b>) + 1*(<b[b[b[b]]]>|1)"},
    {"<b[b,b],b>", "1*(1|<b[b,b],b>) + 2*(b|<b[b],b>) + 1*(b b|<b,b>) + 1*(<b[b,b],b>|1)"},
    {"<b[b[b]],b>", "1*(1|<b[b[b]],b>) + 1*(b|<b[b],b>) + 1*(b[b]|<b,b>) + 1*(<b[b[b]],b>|1)"},
    {"<b[b],b[b]>", "1*(1|<b[b],b[b]>) + 2*(b|<b[b],b>) + 1*(b b|<b,b>) + 1*(<b[b],b[b]>|1)"},
    {"<b[b],b,b>", "1*(1|<b[b],b,b>) + 1*(b|<b,b,b>) + 1*(<b[b],b,b>|1)"},
    {"<b,b,b,b>", "1*(1|<b,b,b,b>) + 1*(<b,b,b,b>|1)"},
};

// Substitution law on aromatic trees, as "k*a(chi)*b(theta)^e" terms.
inline const std::vector<PrintedRow> one_root_table = {
    {"b", "a(b)*b(b)"},
    {"b[b]", "a(b)*b(b[b]) + a(b)*b(b)^2"},
    {"<b> b", "a(b)*b(<b> b) + a(<b> b)*b(b)^2"},
    {"b[b,b]", "a(b)*b(b[b,b]) + 2*a(b[b])*b(b)*b(b[b]) + a(b[b,b])*b(b)^3"},
    {"b[b[b]]]", "a(b)*b(b[b[b]]) + 2*a(b[b])*b(b[b])*b(b) + a(b[b[b]])*b(b)^3"},
    {"<b> b[b]", "a(b)*b(<b> b[b]) + 2*a(b[b])*b(<b> b)*b(b) + a(b[b])*b(b[b])*b(b) + a(<b> b[b])*b(b)^3"},
    {"<b,b> b", "a(b)*b(<b,b> b) + 2*a(<b> b)*b(b[b])*b(b) + a(<b,b> b)*b(b)^3"},
    {"<b[b]> b", "a(b)*b(<b[b]> b) + a(b[b])*b(<b> b)*b(b) + a(<b> b)*b(<b> b)*b(b) + a(<b> b)*b(b[b])*b(b) + a(<b[b]> b)*b(b)^2"},
    {"<b> <b> b", "a(b)*b(<b> <b> b) + 4*a(<b> b)*b(<b> b)*b(b) + a(<b> <b> b)*b(b)^2"},
    {"<b> b[b,b]", "a(b)*b(<b> b[b,b]) + a(<b> b)*b(b[b,b])*b(b) + 2*a(b[b])*b(<b> b)*b(b[b]) + 2*a(b[b])*b(<b> b[b])*b(b) + a(<b> b[b])*b(b[b])*b(b)^2 + 3*a(b[b,b])*b(<b> b)*b(b)^2 + a(<b> b[b,b])*b(b)^4"},
    {"<b> b[b[b]]", "a(b)*b(<b> b[b[b]]) + a(<b> b)*b(b[b[b]])*b(b) + 2*a(b[b])*b(<b> b)*b(b[b]) + 2*a(b[b])*b(<b> b[b])*b(b) + 2*a(<b> b[b])*b(b[b])*b(b)^2 + 3*a(b[b[b]])*b(<b> b)*b(b)^2 + a(<b> b[b[b]])*b(b)^4"},
    {"<b,b> b[b]", "a(b)*b(<b,b> b[b]) + 2*a(b[b])*b(<b,b> b)*b(b) + 2*a(<b> b)*b(b[b])^2 + 2*a(<b> b[b])*b(b[b])*b(b)^2 + a(<b,b> b)*b(b[b])*b(b)^2 + a(<b,b> b[b])*b(b)^2"},
    {"<b[b]> b[b]", "a(b)*b(<b[b]> b[b]) + a(b[b])*b(<b> b[b])*b(b) + a(<b> b)*b(<b> b)*b(b[b]) + a(<b> b)*b(b[b])*b(b) + 2*a(b[b])*b(<b[b]> b)*b(b) + a(b[b,b])*b(<b> b)*b(b)^2 + a(b[b[b]])*b(<b> b)*b(b)^2 + a(<b> b[b])*b(<b> b)*b(b)^2 + a(<b[b]> b)*b(b[b])*b(b)^2 + a(<b[b]> b)*b(b[b])*b(b)^2 + a(<b[b]> b[b])*b(b)^4"},
};

// Substitution law on rootless forests.
inline const std::vector<PrintedRow> rootless_table = {
    {"1", "a(1)"},
    {"<b>", "a(<b>)*b(b)"},
    {"<b[b]>", "a(<b>)*b(b[b]) + a(<b>)*b(<b> b) + a(<b[b]>)*b(b)^2"},
    {"<b,b>", "2*a(<b>)*b(b[b]) + a(<b,b>)*b(b)^2"},
    {"<b> <b>", "2*a(<b>)*b(<b> b) + a(<b> <b>)*b(b)^2"},
    {"<b[b,b]>", "2*a(<b>)*b(<b[b]> b) + a(<b>)*b(b[b,b]) + 2*a(<b[b]>)*b(<b> b)*b(b) + 2*a(<b[b]>)*b(b[b])*b(b) + a(<b[b,b]>)*b(b)^3"},
    {"<b[b[b]]>", "a(<b>)*b(<b[b]> b) + a(<b>)*b(<b> b[b]) + a(<b>)*b(b[b[b]]) + a(<b,b>)*b(<b> b)*b(b) + a(<b[b]>)*b(<b> b)*b(b) + 2*a(<b[b]>)*b(b[b])*b(b) + a(<b[b[b]]>)*b(b)^2"},
    {"<b[b],b>", "a(<b>)*b(b[b[b]]) + a(<b>)*b(b[b,b]) + a(<b>)*b(<b,b> b) + 2*a(<b[b]>)*b(b)*b(b[b]) + a(<b,b>)*b(b)*b(b[b]) + a(<b[b],b>)*b(b)^3"},
    {"<b,b,b>", "3*a(<b>)*b(b[b[b]]) + 3*a(<b,b>)*b(b[b])*b(b) + a(<b,b,b>)*b(b)^3"},
    {"<b,b> <b>", "a(<b>)*b(<b,b> b) + 2*a(<b>)*b(<b> b[b]) + 2*a(<b> <b>)*b(b[b])*b(b) + 2*a(<b,b>)*b(<b> b)*b(b) + a(<b,b> <b>)*b(b)^3"},
    {"<b[b]> <b>", "a(<b>)*b(<b> <b> b) + a(<b>)*b(<b> b[b]) + a(<b>)*b(<b[b]> b) + 2*a(<b[b]>)*b(<b> b)*b(b) + a(<b> <b>)*b(b[b])*b(b) + a(<b[b]>)*b(<b> b)*b(b) + a(<b> <b>)*b(<b> b)*b(b) + a(<b[b]> <b>)*b(b)^3"},
    {"<b> <b> <b>", "3*a(<b>)*b(<b> <b> b) + 6*a(<b> <b>)*b(<b> b)*b(b) + a(<b> <b> <b>)*b(b)^3"},
};
