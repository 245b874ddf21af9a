/*
   Copyright 2026 The lauricella authors

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

#ifndef LAURICELLA_ERRORS_HPP
#define LAURICELLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lauricella {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

// a OneForm handed to the radial integrator was not closed
struct NotClosed : Error {
    using Error::Error;
};

struct NonRegularPoint : Error {
    using Error::Error;
};

struct NonInvertibleEuler : Error {
    using Error::Error;
};

struct NotSemisimpleConfig : Error {
    using Error::Error;
};

struct NotSingleBlock : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

struct TorsionNotZero : Error {
    using Error::Error;
};

struct CoincidingSpeeds : Error {
    using Error::Error;
};

} // namespace lauricella

#endif
