// Copyright 2026 The Semrex Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "semrex/prompts.hpp"

namespace semrex {

namespace {

constexpr const char *kSketchInstruction =
    "Summarize the structure of the following positive examples in the form "
    "of a regular expression sketch. Use {??: <semantic type>} to represent "
    "the unknown part of the sketch.";

// Fixed in-context demonstrations for sketch generation.
constexpr const char *kSketchShots = R"(Positive examples:
- (David J. Alexander), Marc Henri Sempere and Jocelyn Bulow
- (Connie Wong), Sai Wong
- (Amin Abughosh) and Joseph Abughosh and Abeer Elafifi
Sketch:
- \({??: Person}\) ((&|and|,) {??: Person})+
)";

constexpr const char *kSketchShots2 = R"(Positive examples:
- Arugello Market Corp.
- HollyFrontier Corporation
- Iron Pan, Inc.
Sketch:
- {??: Company Name} (, Inc|{??: Corporation})?(\.)?
)";

constexpr const char *kSketchShots3 = R"(Positive examples:
- Bistro Burger Market Street
- Coffeeshop - 3139 Mission
- Crab Station at Fisherman's Wharf
Sketch:
- {??: Restaurant} ((-|at) )?{??: Location}
)";

constexpr const char *kSketchShots4 = R"(Positive examples:
- 15. Mugs & Cups | Drinkware | Google Merchandise Store
- 15. Bags | Google Merchandise Store
- 10. Men's Outerwear | Apparel | Google Merchandise Store
Sketch:
- {??: Integer}\. {??: Product} \|({??: Category} \|)?Google Merchandise Store
)";

constexpr const char *kSketchShots5 = R"(Positive examples:
- Gift of Robert McBratney and Company|1929
- Gift of Minic Custom Woodwork, Inc. New York|1983
- Purchase, Edward C. Moore Jr. Gift|1923
Sketch:
- (Purchase, )?{??: Gift}\|{??: Date}
)";

constexpr const char *kSketchShots6 = R"(Positive examples:
- 0.5 m (50 cm)
- 1.55 kg (1550 g)
- .5 cm (50 mm)
Sketch:
- {??: Float} {??: Unit} \({??: Float} {??: Unit}\)
)";

constexpr const char *kSketchShots7 = R"(Positive examples:
- 0.5 m, 50 cm
- 0.05 m, 5 cm
- 0.05 m, 0.5 cm
Sketch:
- {??: Float} m, {??: Float} cm
)";

constexpr const char *kSketchShots8 = R"(Positive examples:
- Director of DevOps,R&D,54,53,53,16,63,17
- Head of People Ops,Finance & Operations,,10,10,2,4,2
- Sr. Product Manager,Product,27,9,16,4,18,10
Sketch:
- {??: Job},{??: Department}(,{??:Integer}){6}
)";

// Fixed in-context demonstrations for semantic typing.
constexpr const char *kTypingShots =
    R"(Identify all possible substrings of the given input that has the specified semantic. Output none if you are not confident enough.

Composite.Motors,Inc.
Organization: [Composite.Motors];[Composite.Motors,Inc];[Composite.Motors,Inc.]

Composite.Motors,Inc.
Person: none

Big Data Architect at Madison, WI
Place: [Madison];[WI];[Madison, WI]

470-43" Class (42.5" Diag.)   LED   1080p
Integer: [470];[43];[1080]

2011-03-02
Date: [2011-03-02]

1955-10-18
Date: [2011]

404-Stream 11.6" Laptop   Intel Celeron   2GB Memory
Product: [Stream 11.6" Laptop];[Intel Celeron]

Set 2 Tea Towels I Love London
Item: [Tea Towels][Tea Towels I Love London]

)";

}  // namespace

std::string build_sketch_prompt(const std::vector<std::string> &positives) {
  std::string out;
  for (const char *shot : {kSketchShots, kSketchShots2, kSketchShots3,
                           kSketchShots4, kSketchShots5, kSketchShots6,
                           kSketchShots7, kSketchShots8}) {
    out += kSketchInstruction;
    out += '\n';
    out += shot;
    out += '\n';
  }
  out += kSketchInstruction;
  out += "\nPositive examples:\n";
  for (auto &p : positives) {
    out += "- ";
    out += p;
    out += '\n';
  }
  out += "Sketch:";
  return out;
}

std::string build_typing_prompt(const std::string &s, const std::string &tau) {
  std::string out = kTypingShots;
  out += s;
  out += '\n';
  out += tau;
  out += ':';
  return out;
}

std::vector<std::string> parse_bracket_list(const std::string &response) {
  std::vector<std::string> out;
  size_t i = 0;
  while ((i = response.find('[', i)) != std::string::npos) {
    size_t j = response.find(']', i + 1);
    if (j == std::string::npos) break;
    out.push_back(response.substr(i + 1, j - i - 1));
    i = j + 1;
  }
  return out;
}

}  // namespace semrex
