"""Free resolutions and derived functors."""
