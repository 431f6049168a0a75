# Generated by Django 5.2.1 on 2026-10-16 18:00

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Hipergrafo',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('nombre', models.CharField(help_text="Nombre único del hipergrafo (ej: 'T_4')", max_length=80, unique=True)),
                ('vertices', models.JSONField(help_text='Lista de etiquetas de los vértices')),
                ('aristas', models.JSONField(default=list, help_text='Aristas no triviales como listas de etiquetas')),
                ('descripcion', models.CharField(blank=True, help_text='Descripción del hipergrafo', max_length=250)),
                ('created_at', models.DateTimeField(auto_now_add=True, help_text='Fecha de creación automática al guardar')),
            ],
            options={
                'verbose_name': 'Hipergrafo',
                'verbose_name_plural': 'Hipergrafos',
                'ordering': ['nombre'],
            },
        ),
    ]
