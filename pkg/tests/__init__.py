"""Tests package."""




