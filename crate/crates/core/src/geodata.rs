//! Reading point clouds from CSV and GeoJSON, writing result records.
//!
//! Coordinates are longitude/latitude in degrees on a perfect sphere. CSV
//! input has two columns, `lon,lat`; a non-numeric first row is taken as a
//! header. GeoJSON input may be a geometry, a `Feature` or a
//! `FeatureCollection` with `Point`, `MultiPoint`, `LineString`, `Polygon` or
//! `MultiPolygon` geometries. Polygon rings drop their closing vertex.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufReader, Read};
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::sphere::{GeoCoordinate, UnitVector};
use crate::spherical::{FullSphereState, SolveOutcome};

/// Mean Earth radius.
pub const EARTH_RADIUS_KM: f64 = 6371.0088;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CloudFormat {
    Csv,
    GeoJson,
}

impl CloudFormat {
    /// `.geojson` and `.json` files are GeoJSON; everything else is CSV.
    pub fn from_path(path: &Path) -> Self {
        match path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
        {
            Some(ext) if ext == "geojson" || ext == "json" => CloudFormat::GeoJson,
            _ => CloudFormat::Csv,
        }
    }
}

/// Reads lon/lat coordinates in file order.
pub fn read_coordinates<R: Read>(reader: R, format: CloudFormat) -> Result<Vec<GeoCoordinate>> {
    let coords = match format {
        CloudFormat::Csv => read_csv(reader)?,
        CloudFormat::GeoJson => read_geojson(reader)?,
    };
    if coords.is_empty() {
        return Err(Error::invalid("point cloud is empty"));
    }
    Ok(coords)
}

/// Reads a cloud and converts it to unit vectors.
pub fn read_cloud<R: Read>(reader: R, format: CloudFormat) -> Result<Vec<UnitVector>> {
    Ok(read_coordinates(reader, format)?
        .into_iter()
        .map(GeoCoordinate::to_unit)
        .collect())
}

pub fn read_cloud_path(path: &Path) -> Result<Vec<UnitVector>> {
    let file = File::open(path)?;
    read_cloud(BufReader::new(file), CloudFormat::from_path(path))
}

fn read_csv<R: Read>(reader: R) -> Result<Vec<GeoCoordinate>> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(reader);
    let mut out = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(i as u64 + 1, |p| p.line());
            Error::parse(format!("line {line}"), e.to_string())
        })?;
        let line = record.position().map_or(i as u64 + 1, |p| p.line());
        let loc = || format!("line {line}");
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() != 2 {
            return Err(Error::parse(
                loc(),
                format!("expected 2 fields, found {}", record.len()),
            ));
        }
        let parsed: Vec<Option<f64>> = record.iter().map(|f| f.parse::<f64>().ok()).collect();
        let (lon, lat) = match (parsed[0], parsed[1]) {
            (Some(lon), Some(lat)) => (lon, lat),
            _ if i == 0 => continue, // header
            _ => return Err(Error::parse(loc(), "fields are not numbers")),
        };
        out.push(GeoCoordinate::new(lon, lat).map_err(|e| Error::parse(loc(), e.to_string()))?);
    }
    Ok(out)
}

fn read_geojson<R: Read>(reader: R) -> Result<Vec<GeoCoordinate>> {
    let doc: Value =
        serde_json::from_reader(reader).map_err(|e| Error::parse("document", e.to_string()))?;
    let mut out = Vec::new();
    match kind(&doc) {
        Some("FeatureCollection") => {
            let features = doc
                .get("features")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::parse("document", "FeatureCollection without features"))?;
            for (i, feature) in features.iter().enumerate() {
                let loc = format!("feature {i}");
                let geometry = feature
                    .get("geometry")
                    .ok_or_else(|| Error::parse(&loc, "feature without geometry"))?;
                geometry_vertices(geometry, &loc, &mut out)?;
            }
        }
        Some("Feature") => {
            let geometry = doc
                .get("geometry")
                .ok_or_else(|| Error::parse("feature 0", "feature without geometry"))?;
            geometry_vertices(geometry, "feature 0", &mut out)?;
        }
        _ => geometry_vertices(&doc, "geometry", &mut out)?,
    }
    Ok(out)
}

fn kind(v: &Value) -> Option<&str> {
    v.get("type").and_then(Value::as_str)
}

fn geometry_vertices(geometry: &Value, loc: &str, out: &mut Vec<GeoCoordinate>) -> Result<()> {
    let err = |msg: String| Error::parse(loc, msg);
    let coords = geometry
        .get("coordinates")
        .ok_or_else(|| err("geometry without coordinates".into()))?;
    match kind(geometry) {
        Some("Point") => out.push(position(coords, loc)?),
        Some("MultiPoint") | Some("LineString") => {
            for p in array(coords, loc)? {
                out.push(position(p, loc)?);
            }
        }
        Some("Polygon") => polygon(coords, loc, out)?,
        Some("MultiPolygon") => {
            for poly in array(coords, loc)? {
                polygon(poly, loc, out)?;
            }
        }
        Some(other) => return Err(err(format!("unsupported geometry type {other}"))),
        None => return Err(err("geometry without type".into())),
    }
    Ok(())
}

fn polygon(rings: &Value, loc: &str, out: &mut Vec<GeoCoordinate>) -> Result<()> {
    for ring in array(rings, loc)? {
        let mut vertices = array(ring, loc)?
            .iter()
            .map(|p| position(p, loc))
            .collect::<Result<Vec<_>>>()?;
        if vertices.len() > 1 && vertices.first() == vertices.last() {
            vertices.pop();
        }
        out.extend(vertices);
    }
    Ok(())
}

fn array<'a>(v: &'a Value, loc: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::parse(loc, format!("expected an array, found {v}")))
}

fn position(v: &Value, loc: &str) -> Result<GeoCoordinate> {
    let items = array(v, loc)?;
    let num = |i: usize| items.get(i).and_then(Value::as_f64);
    match (num(0), num(1)) {
        (Some(lon), Some(lat)) => {
            GeoCoordinate::new(lon, lat).map_err(|e| Error::parse(loc, e.to_string()))
        }
        _ => Err(Error::parse(loc, format!("invalid position {v}"))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Hemisphere,
    FullSphere(FullSphereState),
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Hemisphere => "hemisphere",
            Status::FullSphere(FullSphereState::A) => "full_sphere_state_a",
            Status::FullSphere(FullSphereState::B) => "full_sphere_state_b",
            Status::FullSphere(FullSphereState::C) => "full_sphere_state_c",
        }
    }
}

/// One solve, ready for output. Circle fields are absent for full-sphere
/// results.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub center_lon: Option<f64>,
    pub center_lat: Option<f64>,
    pub radius_rad: Option<f64>,
    pub radius_deg: Option<f64>,
    pub radius_km: Option<f64>,
    pub status: Status,
    pub n_points: usize,
    pub seed: u64,
}

impl ResultRecord {
    pub fn from_outcome(
        outcome: &SolveOutcome,
        n_points: usize,
        seed: u64,
        sphere_radius_km: Option<f64>,
    ) -> Self {
        match outcome {
            SolveOutcome::Enclosed(circle) => {
                let center = circle.center().to_geo();
                let r = circle.radius();
                ResultRecord {
                    center_lon: Some(center.lon),
                    center_lat: Some(center.lat),
                    radius_rad: Some(r),
                    radius_deg: Some(r.to_degrees()),
                    radius_km: sphere_radius_km.map(|k| r * k),
                    status: Status::Hemisphere,
                    n_points,
                    seed,
                }
            }
            SolveOutcome::NotInHemisphere(v) => ResultRecord {
                center_lon: None,
                center_lat: None,
                radius_rad: None,
                radius_deg: None,
                radius_km: None,
                status: Status::FullSphere(v.state),
                n_points,
                seed,
            },
        }
    }

    fn fields(&self) -> [(&'static str, Field); 8] {
        [
            ("center_lon", Field::Real(self.center_lon)),
            ("center_lat", Field::Real(self.center_lat)),
            ("radius_rad", Field::Real(self.radius_rad)),
            ("radius_deg", Field::Real(self.radius_deg)),
            ("radius_km", Field::Real(self.radius_km)),
            ("status", Field::Text(self.status.as_str())),
            ("n_points", Field::Integer(self.n_points as u64)),
            ("seed", Field::Integer(self.seed)),
        ]
    }
}

enum Field {
    Real(Option<f64>),
    Text(&'static str),
    Integer(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Rounds to 15 significant digits and prints the shortest representation.
pub fn format_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let rounded: f64 = format!("{x:.14e}")
        .parse()
        .expect("scientific notation parses");
    format!("{rounded}")
}

/// Serializes a record with a fixed field order. JSON output is one object;
/// CSV output is a header line and one data line.
pub fn write_result(r: &ResultRecord, format: OutputFormat) -> String {
    let fields = r.fields();
    let mut s = String::new();
    match format {
        OutputFormat::Json => {
            s.push('{');
            for (i, (name, value)) in fields.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                let _ = write!(s, "\"{name}\":");
                match value {
                    Field::Real(Some(x)) => s.push_str(&format_real(*x)),
                    Field::Real(None) => s.push_str("null"),
                    Field::Text(t) => s.push_str(&Value::from(*t).to_string()),
                    Field::Integer(n) => {
                        let _ = write!(s, "{n}");
                    }
                }
            }
            s.push_str("}\n");
        }
        OutputFormat::Csv => {
            let names: Vec<&str> = fields.iter().map(|(n, _)| *n).collect();
            s.push_str(&names.join(","));
            s.push('\n');
            let values: Vec<String> = fields
                .iter()
                .map(|(_, v)| match v {
                    Field::Real(Some(x)) => format_real(*x),
                    Field::Real(None) => String::new(),
                    Field::Text(t) => (*t).to_string(),
                    Field::Integer(n) => n.to_string(),
                })
                .collect();
            s.push_str(&values.join(","));
            s.push('\n');
        }
    }
    s
}

/// CSV text for a cloud, `lon,lat` per line with a header. Values print in
/// shortest round-trip form.
pub fn write_cloud_csv(points: &[GeoCoordinate]) -> String {
    let mut s = String::with_capacity(points.len() * 40 + 8);
    s.push_str("lon,lat\n");
    for g in points {
        let _ = writeln!(s, "{},{}", g.lon, g.lat);
    }
    s
}
