pub mod autos;
pub mod chars;
pub mod conditions;
pub mod exact;
pub mod group;
pub mod hp0;
pub mod reflections;
