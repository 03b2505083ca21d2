use clap::ValueEnum;

use jpk::binomialtype::{bernoulli_series, binomial_family, SeriesF};
use jpk::interpolation::ijack_p;
use jpk::jack::{jack_basis_expansion, jack_p, jack_phi, jack_psi};
use jpk::{Context, Partition, SymPoly};

use crate::{output, Exit, Format, RunArgs, Series};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Jack,
    JackPhi,
    JackPsi,
    Ijack,
    Bernoulli,
    BinomialFamily,
}

impl Kind {
    fn basis_label(self) -> Option<&'static str> {
        match self {
            Kind::Jack => Some("P"),
            Kind::JackPhi => Some("Phi"),
            Kind::JackPsi => Some("Psi"),
            Kind::Ijack => Some("P^ip"),
            Kind::Bernoulli | Kind::BinomialFamily => None,
        }
    }
}

pub(crate) fn run(ctx: &Context, kind: Kind, m: &Partition, run: &RunArgs) -> Result<String, Exit> {
    let poly: SymPoly = match kind {
        Kind::Jack => (*jack_p(ctx, m)?).clone(),
        Kind::JackPhi => jack_phi(ctx, m)?,
        Kind::JackPsi => jack_psi(ctx, m)?,
        Kind::Ijack => (*ijack_p(ctx, m)?).clone(),
        Kind::Bernoulli => family_member(ctx, m, Series::Bernoulli)?,
        Kind::BinomialFamily => {
            if run.series == Series::Both {
                return Err(Exit::invalid(
                    "binomial-family needs --series one or --series bernoulli",
                ));
            }
            family_member(ctx, m, run.series)?
        }
    };
    let jack_basis = match kind {
        Kind::Bernoulli | Kind::BinomialFamily if run.format == Format::Json => {
            Some(jack_basis_expansion(ctx, &poly)?)
        }
        _ => None,
    };
    Ok(output::poly(
        &poly,
        kind.basis_label(),
        m,
        jack_basis,
        run.format,
    ))
}

fn family_member(ctx: &Context, m: &Partition, series: Series) -> Result<SymPoly, Exit> {
    let n = m.weight();
    let f = match series {
        Series::Bernoulli => bernoulli_series(ctx.r(), n)?,
        _ => SeriesF::one(ctx.r(), n),
    };
    let family = binomial_family(ctx, &f, n)?;
    Ok(family[m].clone())
}
