// temporary: profile of the dominant-variance samples
#include <cstdio>
#include <cmath>
#include <complex>
#include <vector>
#include <algorithm>
#include "svp/forms.hpp"
using namespace svp;
using std::uint64_t;
struct SM { uint64_t s; uint64_t next(){ s += 0x9E3779B97F4A7C15ULL; uint64_t z=s; z^=z>>30; z*=0xBF58476D1CE4E5B9ULL; z^=z>>27; z*=0x94D049BB133111EBULL; z^=z>>31; return z;} double uni(){ return (next()>>11)*0x1.0p-53; } };
uint64_t key(uint64_t seed, uint64_t i){ uint64_t z = seed ^ (0xD1B54A32D192ED03ULL*(i+1)); z^=z>>32; z*=0xD6E8FEB86659FD93ULL; z^=z>>32; return z; }
struct Rec { double w; double f[7]; };
int main(){
  double lo=0.2, hi=1.2, dlo=1e-3, dhi=0.2, flo=1.2, fhi=300;
  auto dens=[&](double r,double a,double b){ double lw=std::log(b/a); return (1/std::sqrt(a*a+r*r)-1/std::sqrt(b*b+r*r))/(2*M_PI*r*lw); };
  int n=3; LogFormN nu=mzv_nu(3), om=mzv_omega({3});
  long long N=800000;
  std::vector<Rec> recs; recs.reserve(N);
  std::vector<cplx> t(n);
  double sq=0;
  for(long long i=0;i<N;i++){
    SM rng{key(11,(uint64_t)i)};
    double q=1;
    for(int k=0;k<n;k++){
      std::vector<std::pair<cplx,std::pair<double,double>>> comps;
      comps.push_back({cplx(0,0),{lo,hi}});
      comps.push_back({cplx(1,0),{lo,hi}});
      if(k>0) comps.push_back({t[k-1],{lo,hi}});
      comps.push_back({cplx(0,0),{dlo,dhi}});
      comps.push_back({cplx(1,0),{dlo,dhi}});
      if(k>0) comps.push_back({t[k-1],{dlo,dhi}});
      comps.push_back({cplx(0,0),{flo,fhi}});
      size_t m=comps.size();
      size_t pick=rng.next()%m;
      double u1=rng.uni(),u2=rng.uni(),th=2*M_PI*rng.uni();
      double lw=std::log(comps[pick].second.second/comps[pick].second.first);
      double s=comps[pick].second.first*std::exp(lw*u1);
      double r=s*u2/std::sqrt(1-u2*u2);
      t[k]=comps[pick].first+r*std::polar(1.0,th);
      double qk=0;
      for(auto&c:comps) qk+=dens(std::abs(t[k]-c.first),c.second.first,c.second.second);
      q*=qk/m;
    }
    double w=0;
    try{ w=std::abs(eval_form(nu,t)*std::conj(eval_form(om,t)))/q;}catch(...){}
    if(!std::isfinite(w)) w=0;
    sq+=w*w;
    Rec rc; rc.w=w;
    rc.f[0]=std::abs(t[0]); rc.f[1]=std::abs(t[1]-t[0]); rc.f[2]=std::abs(t[2]-t[1]);
    rc.f[3]=std::abs(1.0-t[2]); rc.f[4]=std::abs(t[1]); rc.f[5]=std::abs(t[2]); rc.f[6]=std::abs(t[0]-1.0);
    recs.push_back(rc);
  }
  std::sort(recs.begin(),recs.end(),[](const Rec&a,const Rec&b){return a.w>b.w;});
  double top=0; for(int i=0;i<N/1000;i++) top+=recs[i].w*recs[i].w;
  printf("E[w^2] %.3e ; top 0.1%% of samples carry %.1f%% of it\n", sq/N, 100*top/sq);
  printf("  w        |t1|  |t2-t1| |t3-t2| |1-t3|  |t2|   |t3|  |t1-1|\n");
  for(int i=0;i<25;i++){
    printf("%9.3g ", recs[i].w);
    for(int k=0;k<7;k++) printf("%7.3g", recs[i].f[k]);
    printf("\n");
  }
  return 0;
}
