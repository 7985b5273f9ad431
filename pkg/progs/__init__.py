"""Programs of the FRACSPEC toolbox."""
