//! NSGA-II survivor selection and main loop.

mod crowding;
mod nsga2;
mod sort;
mod survival;

pub use crowding::{count_positive, crowding_distance};
pub use nsga2::{initial_population, nsga2_iteration, run, RunOutcome, Step};
pub use sort::{nondominated_sort, FrontPeeler, Fronts};
pub use survival::{select_survivors, survivor_select, truncate_by_crowding, Survival};
