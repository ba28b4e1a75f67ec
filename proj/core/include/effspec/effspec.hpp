#ifndef EFFSPEC_EFFSPEC_HPP
#define EFFSPEC_EFFSPEC_HPP

#include "effspec/clan.hpp"
#include "effspec/error.hpp"
#include "effspec/matrix.hpp"
#include "effspec/matrix_io.hpp"
#include "effspec/minor_table.hpp"
#include "effspec/spectral.hpp"
#include "effspec/structure.hpp"

#endif  // EFFSPEC_EFFSPEC_HPP
