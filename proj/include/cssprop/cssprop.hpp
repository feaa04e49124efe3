#ifndef CSSPROP_CSSPROP_HPP
#define CSSPROP_CSSPROP_HPP

#include "gf.hpp"
#include "matrix.hpp"
#include "linear_code.hpp"
#include "gen_format.hpp"
#include "mindist.hpp"
#include "qr.hpp"
#include "css.hpp"
#include "report.hpp"

#endif
