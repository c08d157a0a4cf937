// Copyright 2026 The Lambek Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lambek/render.hpp"

namespace lambek {

namespace {

struct View {
  std::string text;
  std::string latex;
  std::string rule;
  std::vector<View> kids;
};

View view(const Dertree& d) {
  View v{d.seq.to_string(),
         latex_term(d.seq.ante) + " \\vdash " + latex_category(d.seq.succ),
         d.rule ? to_string(*d.rule) : "?",
         {}};
  for (const Dertree& c : d.children) v.kids.push_back(view(c));
  return v;
}

View view(const ArrowProof& p) {
  std::string rule = to_string(p.kind);
  if (!p.rule.empty()) rule += " " + p.rule;
  View v{render_category(p.source) + " -> " + render_category(p.target),
         latex_category(p.source) + " \\to " + latex_category(p.target),
         rule,
         {}};
  for (const ArrowProof& c : p.children) v.kids.push_back(view(c));
  return v;
}

View view(const NatDedNode& n) {
  View v{render_term(n.ante) + " |- " + render_category(n.succ),
         latex_term(n.ante) + " \\vdash " + latex_category(n.succ),
         to_string(n.kind),
         {}};
  for (const NatDedNode& c : n.children) v.kids.push_back(view(c));
  return v;
}

void ascii(const View& v, const std::string& lead, const std::string& next, std::string& out) {
  out += lead + v.text + "   [" + v.rule + "]\n";
  for (std::size_t i = 0; i < v.kids.size(); ++i) {
    bool last = i + 1 == v.kids.size();
    ascii(v.kids[i], next + (last ? "`- " : "|- "), next + (last ? "   " : "|  "), out);
  }
}

std::string ascii(const View& v) {
  std::string out;
  ascii(v, "", "", out);
  return out;
}

std::string escape_label(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$') {
      out += '\\';
      out += c;
    } else {
      out += c;
    }
  }
  return out;
}

void latex(const View& v, std::string& out) {
  static const char* kInf[] = {"\\AxiomC",      "\\UnaryInfC",      "\\BinaryInfC",
                               "\\TrinaryInfC", "\\QuaternaryInfC", "\\QuinaryInfC"};
  if (v.kids.empty()) {
    out += "  \\AxiomC{$" + v.latex + "$}\n";
    return;
  }
  for (const View& k : v.kids) latex(k, out);
  std::size_t n = std::min<std::size_t>(v.kids.size(), 5);
  out += "  \\RightLabel{\\scriptsize " + escape_label(v.rule) + "}\n";
  out += "  " + std::string(kInf[n]) + "{$" + v.latex + "$}\n";
}

std::string latex(const View& v) {
  std::string out = "\\begin{prooftree}\n";
  latex(v, out);
  out += "\\end{prooftree}\n";
  return out;
}

std::string latex_text(const std::string& plain) {
  std::string out;
  std::string atom;
  auto flush = [&] {
    if (atom.empty()) return;
    std::string esc;
    for (char c : atom) {
      if (c == '_' || c == '&' || c == '%' || c == '#' || c == '$' || c == '{' || c == '}') {
        esc += '\\';
      }
      esc += c;
    }
    out += "\\mathrm{" + esc + "}";
    atom.clear();
  };
  for (char c : plain) {
    switch (c) {
      case '/':
        flush();
        out += "/";
        break;
      case '\\':
        flush();
        out += "\\backslash ";
        break;
      case '.':
        flush();
        out += "\\cdot ";
        break;
      case '(':
      case ')':
      case ',':
        flush();
        out += c;
        break;
      case ' ':
        flush();
        out += ' ';
        break;
      default:
        atom += c;
    }
  }
  flush();
  return out;
}

}  // namespace

std::string latex_category(Form f) { return latex_text(render_category(f)); }
std::string latex_term(Term t) { return latex_text(render_term(t)); }

std::string render_tree(const Dertree& d) { return ascii(view(d)); }
std::string render_tree(const ArrowProof& p) { return ascii(view(p)); }
std::string render_tree(const NatDedNode& n) { return ascii(view(n)); }

std::string render_latex(const Dertree& d) { return latex(view(d)); }
std::string render_latex(const ArrowProof& p) { return latex(view(p)); }
std::string render_latex(const NatDedNode& n) { return latex(view(n)); }

}  // namespace lambek
