// Copyright 2026 The dttg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Writes the JSON model fixtures: the days and RA dependent games and the
// Days family of calendar.dtt.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dttg/dtt.h"
#include "dttg/fixtures.h"
#include "dttg/interp.h"
#include "dttg/serialize.h"

namespace {

void Write(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text << "\n";
  if (!out) throw std::runtime_error("cannot write " + path);
  std::cout << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate JSON fixtures"};
  std::string dir = ".";
  std::string module;
  app.add_option("--out", dir, "Output directory");
  app.add_option("--module", module, "calendar.dtt")->required();
  CLI11_PARSE(app, argc, argv);
  try {
    Write(dir + "/days.json", dttg::DependentGameToJson(dttg::calendar::Days()));
    Write(dir + "/ra.json", dttg::DependentGameToJson(dttg::calendar::Lyrics()));
    std::ifstream in(module);
    std::stringstream ss;
    ss << in.rdbuf();
    dttg::dtt::Signature sig;
    sig.Load(ss.str());
    dttg::Interpreter interp(sig, dttg::Cwf(1));
    Write(dir + "/days_family.json", dttg::FamilyToJson(interp.Family("Days")));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
