/*
   Copyright 2026 The cyclokit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOKIT_CYCLOKIT_HPP
#define CYCLOKIT_CYCLOKIT_HPP

#include "cyclokit/classifier.hpp"
#include "cyclokit/cyclic_numbers.hpp"
#include "cyclokit/cyclotomic.hpp"
#include "cyclokit/errors.hpp"
#include "cyclokit/fp_poly.hpp"
#include "cyclokit/int_poly.hpp"
#include "cyclokit/lfsr.hpp"
#include "cyclokit/numbers.hpp"
#include "cyclokit/poly_io.hpp"

#endif
