#pragma once

#include <string>

#include "teachdim/budget.hpp"
#include "teachdim/preference.hpp"

namespace teachdim {

// ---- Hypothesis-class text format (.hc) -----------------------------
//
//   # comment
//   instances <n>
//   instance-names <name1> ... <namen>     (optional)
//   <name>: <b1> <b2> ... <bn>             (one line per hypothesis)
//
// UTF-8, LF line endings, bits separated by single spaces. The canonical
// serialization writes hypotheses in stored order.

ClassPtr parse_hc(const std::string& text);
ClassPtr load_hc(const std::string& path);

std::string canonical_hc_text(const HypothesisClass& cls);
void save_hc(const HypothesisClass& cls, const std::string& path);

// FNV-1a over the canonical .hc text, as 16 hex digits; the binding id
// stored inside .pref files.
std::string class_hash(const HypothesisClass& cls);

// ---- Preference-function JSON format (.pref) -------------------------
//
// Top-level object: family, class_hash, default_rank, entries (family
// shaped). The loader validates the hash against the supplied class.

std::string pref_to_json(const PreferenceFunction& sigma);
PreferenceFunction parse_pref(const std::string& json_text, ClassPtr cls);

void save_pref(const PreferenceFunction& sigma, const std::string& path,
               const Budget& budget = Budget::from_env());
PreferenceFunction load_pref(const std::string& path, ClassPtr cls);

// Raw file helpers shared by the CLI.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace teachdim
